#!/usr/bin/env python3
# Copyright 2026 The Veilbreak Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the small vocabulary/embedding fixtures under data/fixtures."""

import pathlib

import numpy as np

DIM = 50
OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"

# word -> corpus count. Distractors are deliberately more frequent than the
# intended corrections so that a frequency-only choice goes wrong.
COUNTS = {
    "the": 9000, "a": 8000, "and": 7000, "of": 6500, "to": 6000, "you": 3000,
    "you're": 900, "is": 5000, "are": 3000, "we": 2500, "our": 1500,
    "stupid": 120, "stud": 700, "stubborn": 80, "administrators": 60,
    "anti": 150, "american": 400, "hate": 200, "ate": 900, "ante": 250,
    "groups": 300, "biased": 90, "fuck": 110, "fudge": 140, "duck": 600,
    "great": 800, "graft": 950, "money": 900, "cost": 500, "jobs": 400,
    "tops": 450, "bots": 150, "beach": 200, "home": 700, "interest": 350,
    "opportunity": 300, "easy": 600, "little": 700, "relatively": 150,
    "pc": 100, "puzzle": 80, "religion": 120, "peace": 200, "violence": 150,
    "it": 6000, "really": 900, "be": 4000, "make": 1200, "with": 4000,
    "have": 3500, "quit": 200, "will": 3000, "soon": 700, "buy": 800,
    "on": 5000, "live": 900, "off": 1100,
}

# Topics: each word is a unit vector near its topic direction.
TOPICS = {
    "insult": ["stupid", "stubborn", "administrators", "biased", "fuck",
               "you're", "you"],
    "hostility": ["anti", "american", "hate", "groups", "violence",
                  "religion", "peace"],
    "food": ["ate", "fudge", "duck", "ante"],
    "horse": ["stud"],
    "finance": ["great", "money", "jobs", "opportunity", "easy",
                "interest", "relatively", "little", "make", "quit", "soon",
                "buy", "cost"],
    "other": ["graft", "tops", "bots", "beach", "home", "pc", "puzzle"],
}


def main():
    rng = np.random.default_rng(20190101)
    basis, _ = np.linalg.qr(rng.standard_normal((DIM, DIM)))
    vectors = {}
    for t, (topic, words) in enumerate(TOPICS.items()):
        axis = basis[:, t]
        for w in words:
            v = axis + 0.15 * rng.standard_normal(DIM)
            vectors[w] = v / np.linalg.norm(v)
    # Corrections lie exactly in the span of their sentence context.
    vectors["stupid"] = 0.7 * vectors["stubborn"] + 0.3 * vectors["administrators"]
    vectors["hate"] = 0.5 * vectors["anti"] + 0.5 * vectors["groups"]
    vectors["fuck"] = 0.6 * vectors["biased"] + 0.4 * vectors["you're"]
    vectors["great"] = 0.6 * vectors["make"] + 0.4 * vectors["relatively"]
    vectors["jobs"] = 0.5 * vectors["quit"] + 0.5 * vectors["buy"]

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "insult_vocab.tsv", "w") as f:
        for w in sorted(COUNTS):
            f.write(f"{w}\t{COUNTS[w]}\n")
    with open(OUT / "insult_embeddings.txt", "w") as f:
        f.write(f"{len(vectors)} {DIM}\n")
        for w in sorted(vectors):
            f.write(w + " " + " ".join(f"{x:.8f}" for x in vectors[w]) + "\n")
    with open(OUT / "insult_revised.txt", "w") as f:
        f.write("the stu*pid and stubborn administrators\n"
                "anti American ahte groups\n"
                "you're a biased fucdk\n")
    with open(OUT / "insult_corrected.txt", "w") as f:
        f.write("the stupid and stubborn administrators\n"
                "anti American hate groups\n"
                "you're a biased fuck\n")
    with open(OUT / "spam_revised.txt", "w") as f:
        f.write("it really be a grfat oppotunity to make relatively easy "
                "fmoney, with little cosgt to you.\n"
                "we have quit our tobs, and will soon buy a home on the beach "
                "and live off the interest on our jmoney.\n")
    with open(OUT / "spam_corrected.txt", "w") as f:
        f.write("it really be a great opportunity to make relatively easy "
                "money, with little cost to you.\n"
                "we have quit our jobs, and will soon buy a home on the beach "
                "and live off the interest on our money.\n")


if __name__ == "__main__":
    main()
