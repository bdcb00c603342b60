#!/usr/bin/env python3
#
# Copyright 2026 The AEDA Toolkit Authors
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
#
"""Generates the bundled two-class synthetic review corpus.

Sentences are lowercase, space separated (punctuation is its own token) and
labelled 1 (positive) or 0 (negative). Each sentence mixes topic words,
filler and a few polar words drawn from Zipf-weighted class vocabularies,
with some cross-polarity words and label noise so that no classifier is
perfect at small training sizes.

  make_synthetic_corpus.py --n 2400 --seed 7 --output data/synthetic_reviews.tsv
"""

import argparse
import random

POSITIVE = """good great excellent superb wonderful charming delightful
beautiful funny moving clever smart brilliant engaging interesting fresh
lovely gorgeous enjoyable heartfelt touching witty sharp stunning powerful
memorable masterful tender thoughtful inventive gripping hilarious joyful
elegant vivid rich warm sincere satisfying solid strong terrific winning
graceful luminous rewarding playful confident affecting absorbing""".split()

NEGATIVE = """bad awful terrible boring dull tedious poor lousy stupid dumb
ugly flat weak lame messy clumsy bland tired stale predictable shallow
pointless annoying dreadful painful forgettable hollow muddled sloppy
pretentious tiresome lifeless silly cheap empty incoherent overlong
unfunny grating mediocre awkward listless joyless sluggish frustrating
irritating derivative flimsy wooden""".split()

TOPIC = """movie film story plot acting actor actress director script
screenplay camera music score ending scene character cast dialogue comedy
drama thriller romance performance cinematography editing pacing sequel
premise humor tone visuals soundtrack effects villain hero narrative
production picture feature debut documentary adaptation""".split()

FILLER = """the a an this that it is was was as with of in on at by for to
and but or its their his her some very quite rather really just too so
more most all every one two first last new old own same other such only
about from into over than then when while after before through also even
still yet never always often sometimes almost nearly simply truly""".split()

NEUTRAL = """time year day life world people man woman family friend city
night story way thing part moment hour minute place home town war love
house road life back side end kind sort lot bit rest case point fact
audience viewer critic theater screen studio budget star role""".split()

NEGATORS = ["not", "hardly", "never"]


def zipf_weights(n, s=1.1):
    return [1.0 / (r + 1) ** s for r in range(n)]


def sentence(rng, label, pos_w, neg_w):
    own, own_w = (POSITIVE, pos_w) if label == 1 else (NEGATIVE, neg_w)
    other, other_w = (NEGATIVE, neg_w) if label == 1 else (POSITIVE, pos_w)
    length = rng.randint(6, 24)
    words = []
    n_polar = rng.choice([1, 1, 2, 2, 3])
    n_cross = 1 if rng.random() < 0.3 else 0
    n_topic = rng.randint(1, 3)
    for _ in range(n_polar):
        words.append(rng.choices(own, own_w)[0])
    for _ in range(n_cross):
        words.append(rng.choices(other, other_w)[0])
    for _ in range(n_topic):
        words.append(rng.choice(TOPIC))
    while len(words) < length:
        words.append(rng.choice(FILLER) if rng.random() < 0.6 else rng.choice(NEUTRAL))
    rng.shuffle(words)
    if rng.random() < 0.1:
        words.insert(rng.randrange(len(words)), rng.choice(NEGATORS))
    if len(words) > 8 and rng.random() < 0.5:
        words.insert(rng.randrange(2, len(words) - 2), ",")
    words.append("." if rng.random() < 0.85 else "!")
    return " ".join(words)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2400)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--label-noise", type=float, default=0.05)
    parser.add_argument("--output", required=True)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pos_w = zipf_weights(len(POSITIVE))
    neg_w = zipf_weights(len(NEGATIVE))
    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        for i in range(args.n):
            label = i % 2
            text = sentence(rng, label, pos_w, neg_w)
            if rng.random() < args.label_noise:
                label = 1 - label
            f.write(f"{label}\t{text}\n")


if __name__ == "__main__":
    main()
