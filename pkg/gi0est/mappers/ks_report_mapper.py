from gi0est.enumeration.item_type import ItemType
from gi0est.service.goodness_of_fit import P_VALUE_METHOD


class KsReportMapper(object):
    def ks_report_to_dict(self, report):
        return {
            'type': ItemType.KS_REPORT,
            'status': report.status,
            'estimator': report.estimator,
            'estimate_status': report.estimate_status,
            'alpha_hat': report.alpha_hat,
            'n_x': report.n_x,
            'n_y': report.n_y,
            'statistic': report.statistic,
            'p_value': report.p_value,
            'p_value_method': P_VALUE_METHOD,
            'seed': report.seed,
        }
