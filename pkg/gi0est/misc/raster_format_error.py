class RasterFormatError(ValueError):
    pass
