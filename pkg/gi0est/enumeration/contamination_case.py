class ContaminationCase:
    NONE = 'none'
    # replaced by a draw with a different roughness alpha2
    CASE1 = 'case1'
    # replaced by the constant C
    CASE2 = 'case2'
    # replaced by a draw with scale 10^k times larger
    CASE3 = 'case3'

    ALL = [NONE, CASE1, CASE2, CASE3]
