class ItemType:
    CELL_STATS = 'cell_stats'
    CELL_TIMING = 'cell_timing'
    FAILURE_RATE = 'failure_rate'
    DENSITY_POINT = 'density_point'
    KS_REPORT = 'ks_report'
