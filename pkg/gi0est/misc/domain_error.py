class DomainError(ValueError):
    pass
