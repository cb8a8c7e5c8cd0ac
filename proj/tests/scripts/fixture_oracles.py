#!/usr/bin/env python3
"""Independent reference values for the fixture corpus.

Recomputes, without the C++ code, the numbers frozen into the tests:
class distribution, and top-10 terms (global and per class) under the default
pipeline: [A-Za-z0-9]+ tokens, lowercased, Glasgow stop words removed,
Porter-stemmed (NLTK, MARTIN_EXTENSIONS), tokens shorter than 2 dropped,
terms with document frequency < 2 pruned.

It also recomputes metrics from a predictions file written by the acceptance
suite (`--predictions`), as a cross-check of the metric formulas.
"""
import argparse
import collections
import csv
import json
import re
from pathlib import Path

from nltk.stem.porter import PorterStemmer

ROOT = Path(__file__).resolve().parents[2]


def stopwords():
    lines = (ROOT / "core" / "data" / "stopwords_english.txt").read_text().splitlines()
    return {w for w in lines if w and not w.startswith("#")}


def load_rows(path):
    with open(path, newline="", encoding="utf-8") as f:
        return [r for r in csv.DictReader(f) if r["title"] or r["text"]]


def pipeline(text, stop, stemmer):
    tokens = [t.lower() for t in re.findall(r"[A-Za-z0-9]+", text)]
    tokens = [t for t in tokens if t not in stop]
    tokens = [stemmer.stem(t) if t.isalpha() else t for t in tokens]
    return [t for t in tokens if len(t) >= 2]


def top_k(docs, keep, k=10):
    totals = collections.Counter(t for d in docs for t in d if t in keep)
    return sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))[:k]


def metrics_from_predictions(path):
    tp = fp = fn = tn = 0
    for line in Path(path).read_text().splitlines():
        predicted, actual = line.split()
        p, a = predicted == "FAKE", actual == "FAKE"
        tp += p and a
        fp += p and not a
        fn += (not p) and a
        tn += (not p) and (not a)
    total = tp + fp + fn + tn
    return {
        "tp": tp, "fp": fp, "fn": fn, "tn": tn,
        "accuracy": (tp + tn) / total,
        "precision": tp / (tp + fp) if tp + fp else 0.0,
        "recall": tp / (tp + fn) if tp + fn else 0.0,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--data", default=str(ROOT / "tests" / "data" / "fixture_news.csv"))
    ap.add_argument("--predictions")
    args = ap.parse_args()

    if args.predictions:
        print(json.dumps(metrics_from_predictions(args.predictions), indent=1))
        return

    rows = load_rows(args.data)
    print("class distribution:", dict(collections.Counter(r["label"] for r in rows)))

    stop, stemmer = stopwords(), PorterStemmer(PorterStemmer.MARTIN_EXTENSIONS)
    docs = [pipeline(r["title"] + " " + r["text"], stop, stemmer) for r in rows]
    df = collections.Counter(t for d in docs for t in set(d))
    keep = {t for t, n in df.items() if n >= 2}
    print("vocabulary size:", len(keep))
    print("top10 all:", top_k(docs, keep))
    for label in ("FAKE", "REAL"):
        print(f"top10 {label}:", top_k([d for d, r in zip(docs, rows) if r["label"] == label], keep))


if __name__ == "__main__":
    main()
