class Histogram(object):
    def __init__(self, bin_edges, densities):
        self.bin_edges = bin_edges
        self.densities = densities

    @property
    def bin_count(self):
        return len(self.densities)
