class Gi0Params(object):
    def __init__(self, alpha, gamma, looks):
        self.alpha = alpha
        self.gamma = gamma
        self.looks = looks

    def __eq__(self, other):
        return isinstance(other, Gi0Params) and \
            (self.alpha, self.gamma, self.looks) == (other.alpha, other.gamma, other.looks)

    def __hash__(self):
        return hash((self.alpha, self.gamma, self.looks))

    def __repr__(self):
        return 'Gi0Params(alpha={}, gamma={}, looks={})'.format(self.alpha, self.gamma, self.looks)
