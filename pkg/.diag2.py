"""Scratch: artifact surrogate check under person-time control sampling and
the boosted childhood anchors. No model: share oracle + visible features."""
from collections import defaultdict

import numpy as np

from seqrisk.evaluation import (
    CohortIndex, build_case_control, stratified_auc,
)
from seqrisk.sequence import build_dataset, MODE_FIRST_OCC
from seqrisk.synthetic import demo_spec, sample_cohort, true_death_rate, true_disease_rate
from seqrisk.vocab import build_vocabulary

TARGETS = {"I21", "I50", "J44", "N18"}
FILLER = 1.0 / 365.0

spec = demo_spec()
records, _ = sample_cohort(spec, n_patients=20000, seed=303)
vocab, _ = build_vocabulary(records, 1)
seqs, _ = build_dataset(records, vocab, mode=MODE_FIRST_OCC, seed=303)
by_pid = {r.patient_id: r for r in records}
seq_by_pid = {s.patient_id: s for s in seqs}
index = CohortIndex(records, seqs)

starts = np.array([min(ev.age_days for ev in r.events) for r in records])
print(f"record start < 20y: {(starts < 7305).mean():.4f}; "
      f"median {np.median(starts)/365.25:.1f}y")
lens = np.array([len(s) for s in seqs])
print(f"seq len mean {lens.mean():.1f} p95 {np.percentile(lens, 95):.0f} "
      f"max {lens.max()}")

diseases = sorted(spec.diseases)

print(f"\n{'disease':8s} {'n_case':>6s} {'share':>7s} {'n_tok':>7s} {'n_acq':>7s} "
      f"{'t_last':>7s} {'start':>7s} {'agebin':>7s}")
for d in diseases:
    ss = build_case_control(records, seqs, d, None, 0, index)
    n = len(ss)
    n_case = sum(1 for s in ss if s.is_case)
    if n_case == 0:
        print(f"{'T' if d in TARGETS else ' '}{d:7s} {n_case:6d}   (no cases)")
        continue
    share = np.empty(n)
    n_tok = np.empty(n)
    n_acq = np.empty(n)
    t_last = np.empty(n)
    start = np.empty(n)
    agebin = np.empty(n)
    for i, s in enumerate(ss):
        rec = by_pid[s.patient_id]
        seq = seq_by_pid[s.patient_id]
        age = s.prediction_age_days
        hist = {ev.category for ev in rec.events if ev.age_days <= age}
        hist.discard(s.disease)
        rates = true_disease_rate(spec, hist, s.sex, age)
        share[i] = rates[s.disease] / (sum(rates.values())
                                       + true_death_rate(spec, age) + FILLER)
        n_tok[i] = s.position
        n_acq[i] = len(hist)
        t_last[i] = age - seq.ages[s.position - 1]
        start[i] = min(ev.age_days for ev in rec.events)
        agebin[i] = age % int(5 * 365.25)

    def f(val):
        a = stratified_auc(ss, val)[0]
        return "  --  " if a is None else f"{a:.4f}"
    tag = "T" if d in TARGETS else " "
    print(f"{tag}{d:7s} {n_case:6d} {f(share):>7s} {f(n_tok):>7s} {f(n_acq):>7s} "
          f"{f(t_last):>7s} {f(start):>7s} {f(agebin):>7s}", flush=True)
