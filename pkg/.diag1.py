"""Scratch: side-by-side scoring of the same eval samples.
Model vs raw-hazard oracle vs share oracle vs baseline, then feature probes
inside strata for the worst band offenders."""
import math
from collections import defaultdict

import numpy as np

from seqrisk.checkpoint import load_checkpoint
from seqrisk.evaluation import (
    CohortIndex, DemographicBaseline, ScoreCache, build_case_control,
    evaluable_diseases, model_scores, stratified_auc,
)
from seqrisk.records import read_patients
from seqrisk.sequence import build_dataset, MODE_FIRST_OCC
from seqrisk.synthetic import HazardSpec, sample_cohort, true_death_rate, true_disease_rate
from seqrisk.vocab import Vocabulary

OUT = "/root/pkg/.dryrun"
TARGETS = {"I21", "I50", "J44", "N18"}
FILLER = 1.0 / 365.0

spec = HazardSpec.load(f"{OUT}/hazards.json")
train_records = read_patients(f"{OUT}/patients.jsonl")
vocab = Vocabulary.load(f"{OUT}/vocab.json")
model = load_checkpoint(f"{OUT}/checkpoint")

records, _ = sample_cohort(spec, n_patients=20000, seed=303)
seqs, _ = build_dataset(records, vocab, mode=MODE_FIRST_OCC, seed=303)
baseline = DemographicBaseline(train_records, evaluable_diseases(vocab))
by_pid = {r.patient_id: r for r in records}
seq_by_pid = {s.patient_id: s for s in seqs}
index = CohortIndex(records, seqs)
cache = ScoreCache(model, seqs)

diseases = [d for d in evaluable_diseases(vocab) if d != "death"]

sample_sets = {}
needed = defaultdict(set)
for d in diseases:
    ss = build_case_control(records, seqs, d, None, 0, index)
    sample_sets[d] = ss
    for s in ss:
        needed[s.patient_id].add(s.position)
cache.populate(needed)


def share_and_raw(samples):
    raw = np.empty(len(samples))
    share = np.empty(len(samples))
    for i, s in enumerate(samples):
        rec = by_pid[s.patient_id]
        age = s.prediction_age_days
        hist = {ev.category for ev in rec.events if ev.age_days <= age}
        hist.discard(s.disease)
        rates = true_disease_rate(spec, hist, s.sex, age)
        lam = rates[s.disease]
        tot = sum(rates.values()) + true_death_rate(spec, age) + FILLER
        raw[i] = lam
        share[i] = lam / tot
    return raw, share


def fmt(pair):
    a = pair[0]
    return "  --  " if a is None else f"{a:.4f}"


print(f"{'disease':8s} {'n_case':>6s} {'model':>7s} {'raw_or':>7s} "
      f"{'share_or':>8s} {'base':>7s}")
for d in diseases:
    ss = sample_sets[d]
    m = model_scores(cache, ss, vocab, None)
    raw, share = share_and_raw(ss)
    base = baseline.score_samples(ss)
    n_case = sum(1 for s in ss if s.is_case)
    tag = "T" if d in TARGETS else " "
    print(f"{tag}{d:7s} {n_case:6d} {fmt(stratified_auc(ss, m)):>7s} "
          f"{fmt(stratified_auc(ss, raw)):>7s} {fmt(stratified_auc(ss, share)):>8s} "
          f"{fmt(stratified_auc(ss, base)):>7s}", flush=True)

print("\n=== feature probes (stratified AUC) ===")
for d in ("I10", "C61", "A09", "M54", "K80", "E11"):
    ss = sample_sets[d]
    m = model_scores(cache, ss, vocab, None)
    n = len(ss)
    feats = {
        "model": m,
        "share": share_and_raw(ss)[1],
        "n_tokens": np.empty(n),
        "n_acq": np.empty(n),
        "age_in_bin": np.empty(n),
        "t_since_last": np.empty(n),
        "rec_start": np.empty(n),
        "trigger_any": np.empty(n),
    }
    for i, s in enumerate(ss):
        rec = by_pid[s.patient_id]
        seq = seq_by_pid[s.patient_id]
        age = s.prediction_age_days
        hist = {ev.category for ev in rec.events if ev.age_days <= age}
        hist.discard(s.disease)
        feats["n_tokens"][i] = s.position
        feats["n_acq"][i] = len(hist)
        feats["age_in_bin"][i] = age % int(5 * 365.25)
        feats["t_since_last"][i] = age - seq.ages[s.position - 1]
        feats["rec_start"][i] = min(ev.age_days for ev in rec.events)
        feats["trigger_any"][i] = float(bool(hist & {"E11", "I10", "J45"}))
    print(f"\n{d}:")
    for name, val in feats.items():
        print(f"  {name:12s} {fmt(stratified_auc(ss, val))}")
