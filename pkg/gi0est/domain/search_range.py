class SearchRange(object):
    def __init__(self, lo=-20.0, hi=-1.0 - 1e-6, tol_alpha=1e-4):
        if not lo < hi < -1:
            raise ValueError('Search range must satisfy lo < hi < -1, got [{}, {}]'.format(lo, hi))
        if tol_alpha <= 0:
            raise ValueError('tol_alpha must be positive')
        self.lo = lo
        self.hi = hi
        self.tol_alpha = tol_alpha


DEFAULT_SEARCH_RANGE = SearchRange()
