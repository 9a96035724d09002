class EstimatorType:
    ML = 'ml'
    MOM12 = 'mom12'
    LOG_CUMULANT = 'logcum'
    TRIANGULAR = 'triangular'

    ALL = [ML, MOM12, LOG_CUMULANT, TRIANGULAR]
    # A replicate is discarded when one of these fails
    DISCARD_ON_FAILURE = [MOM12, LOG_CUMULANT]
