class KernelType:
    INVERSE_GAUSSIAN = 'inverse_gaussian'
    GAMMA = 'gamma'

    ALL = [INVERSE_GAUSSIAN, GAMMA]
