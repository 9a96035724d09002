class KsStatus:
    TESTED = 'tested'
    NOT_AVAILABLE = 'not_available'
