from gi0est.domain.contamination_spec import ContaminationSpec, NO_CONTAMINATION
from gi0est.enumeration.contamination_case import ContaminationCase

DEFAULT_ALPHAS = [-1.5, -3.0, -5.0]
DEFAULT_LOOKS = [1.0, 3.0, 8.0]
DEFAULT_SIZES = [9, 25, 49, 81, 121, 1000]
DEFAULT_EPSILONS = [0.001, 0.005, 0.01]
DEFAULT_ALPHA2S = [-4.0, -15.0]
DEFAULT_C_VALUE = 100.0
DEFAULT_K_EXPONENT = 2


def default_contamination():
    specs = []
    for epsilon in DEFAULT_EPSILONS:
        for alpha2 in DEFAULT_ALPHA2S:
            specs.append(ContaminationSpec(ContaminationCase.CASE1, epsilon, alpha2=alpha2))
        specs.append(ContaminationSpec(ContaminationCase.CASE2, epsilon, c_value=DEFAULT_C_VALUE))
        specs.append(ContaminationSpec(ContaminationCase.CASE3, epsilon, k_exponent=DEFAULT_K_EXPONENT))
    return specs


class GridCell(object):
    def __init__(self, alpha, looks, n, contamination=NO_CONTAMINATION):
        self.alpha = alpha
        self.looks = looks
        self.n = n
        self.contamination = contamination

    @property
    def key(self):
        return (self.alpha, self.looks, self.n) + self.contamination.key

    def __eq__(self, other):
        return isinstance(other, GridCell) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'GridCell(alpha={}, looks={}, n={}, contamination={})'.format(
            self.alpha, self.looks, self.n, self.contamination)


class GridSpec(object):
    def __init__(self, alphas=None, looks=None, sizes=None, contamination=None, replicates=1000, base_seed=0,
                 include_uncontaminated=True):
        self.alphas = list(DEFAULT_ALPHAS if alphas is None else alphas)
        self.looks = list(DEFAULT_LOOKS if looks is None else looks)
        self.sizes = list(DEFAULT_SIZES if sizes is None else sizes)
        self.contamination = list(default_contamination() if contamination is None else contamination)
        self.replicates = replicates
        self.base_seed = base_seed
        self.include_uncontaminated = include_uncontaminated

    def cells(self):
        contamination = ([NO_CONTAMINATION] if self.include_uncontaminated else []) + \
            [spec for spec in self.contamination if spec.case != ContaminationCase.NONE]
        return [GridCell(alpha, looks, n, spec)
                for alpha in self.alphas
                for looks in self.looks
                for n in self.sizes
                for spec in contamination]
