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
"""Straight-line reference sampler for punctuation insertion.

Written separately from the C++ library and sharing no code with it. Used to
produce the golden files in tests/golden/; the test suite reruns it and
compares against the committed copies.

  reference_aeda.py single --seed 42 the cat sat on the mat
  reference_aeda.py batch --input in.tsv --num-aug 9 --seed 0 --output out.tsv
"""

import argparse
import sys

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MARKS = [".", ";", "?", ":", "!", ","]


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class Stream:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, bound):
        threshold = (1 << 64) % bound
        while True:
            r = self.next()
            if r >= threshold:
                return r % bound


def derive(master, *path):
    h = mix64(master & MASK)
    for key in path:
        h = mix64(h ^ mix64((key + GAMMA) & MASK))
    return h


def augment(words, stream, ratio_num=1, ratio_den=3):
    length = len(words)
    assert length >= 1
    upper = max(1, (length * ratio_num) // ratio_den)
    count = 1 + stream.below(upper)
    slots = list(range(length))
    for k in range(count):
        j = k + stream.below(length - k)
        slots[k], slots[j] = slots[j], slots[k]
    chosen = {}
    for k in range(count):
        chosen[slots[k]] = MARKS[stream.below(len(MARKS))]
    out = []
    for i, word in enumerate(words):
        if i in chosen:
            out.append(chosen[i])
        out.append(word)
    return out


def batch(lines, num_aug, seed):
    out = []
    for i, line in enumerate(lines):
        label, text = line.split("\t", 1)
        out.append(line)
        words = text.split()
        for j in range(num_aug):
            aug = augment(words, Stream(derive(seed, i, j)))
            out.append(label + "\t" + " ".join(aug))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)
    single = sub.add_parser("single")
    single.add_argument("--seed", type=int, required=True)
    single.add_argument("words", nargs="+")
    many = sub.add_parser("batch")
    many.add_argument("--input", required=True)
    many.add_argument("--output", required=True)
    many.add_argument("--num-aug", type=int, required=True)
    many.add_argument("--seed", type=int, required=True)
    args = parser.parse_args()

    if args.cmd == "single":
        sys.stdout.write(" ".join(augment(args.words, Stream(args.seed))) + "\n")
        return
    with open(args.input, encoding="utf-8", newline="\n") as f:
        lines = [l.rstrip("\n") for l in f if l.rstrip("\n")]
    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        for line in batch(lines, args.num_aug, args.seed):
            f.write(line + "\n")


if __name__ == "__main__":
    main()
