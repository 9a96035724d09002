class TailReport(object):
    def __init__(self, tail_index, slope_estimate, abscissae):
        self.tail_index = tail_index
        self.slope_estimate = slope_estimate
        self.abscissae = abscissae
