"""
Monte Carlo failure rates
=========================

A small campaign on the [16,4] code over GF(17).  Failures are absent below
half the distance, rare at tau(2) = 7 and near certain beyond.  The same
campaign is available from the command line as ``powerdecode simulate``.
"""

from powerdecoding import sim

cfg = sim.ExperimentConfig.from_dict({
    "code": {"field": "17", "n": 16, "k": 4},
    "ell": 2,
    "eps": "5:10",
    "trials": 200,
    "seed": 6,
    "detail": True,
})
rows = sim.run_failure_experiment(cfg)
print(sim.to_csv(rows, sim.FAILURE_COLUMNS + sim.DETAIL_COLUMNS))
