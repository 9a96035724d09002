class EmptyCellError(Exception):
    pass
