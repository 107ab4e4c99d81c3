#!/usr/bin/env python3
"""Writes data/toy_vectors.txt: small topic-clustered word vectors in word2vec text format.

Every token of the toy corpus (plus the two 'sentence' definitions) gets a
vector. Words listed under a topic sit near that topic's centre; the rest sit
near a shared 'general' centre. Output is deterministic.
"""
import pathlib
import re
import zlib

import numpy as np

DIM = 16
ROOT = pathlib.Path(__file__).resolve().parents[2]

TOPICS = {
    "grammar": """syntax syllable syllables lexicon thesaurus grammatical grammar comma noun verb
        clause clauses punctuation vocabulary synonym adjective adverb apostrophe paragraph spelling
        typos typo pronunciation vowel words word language languages phrases rhyme rhythm verse
        dictionary linguists haiku predicate subject tense meaning string rules satisfying draft
        spelled letters""",
    "law": """verdict punishment sentencing retrial penalty jury judge court trial lawyer prison
        guilty criminal judgment final imposed crime offender prosecutor prosecutors evidence
        testimony witnesses deliberation convicted defendant justice warden guilt juror misconduct
        appeals defense thief constitution plea admissible hearing legal brief contract federal
        cruel harsh deter remorse transcript instructions""",
    "nature": """rain river garden tulips daffodils spring storm valley snow snowman park beach
        sunset sun bloomed flooded streets""",
    "food": """bakery bread croissants soup pepper thyme chef seasoned warm fresh""",
}

CENTRE_SCALE = {"grammar": 1.0, "law": 1.0, "nature": 1.0, "food": 1.0, "general": 0.6}


def unit(rng):
    v = rng.standard_normal(DIM)
    return v / np.linalg.norm(v)


def main():
    rng = np.random.RandomState(20220710)
    centres = {name: unit(rng) for name in list(TOPICS) + ["general"]}
    topic_of = {}
    for name, words in TOPICS.items():
        for w in words.split():
            topic_of[w] = name

    text = (ROOT / "data" / "toy_corpus.txt").read_text()
    text += " a string of words satisfying the grammatical rules of a language"
    text += " a final judgment of guilty in a criminal case and the punishment that is imposed"
    vocab = sorted(set(re.findall(r"[a-z0-9]+", text.lower())) | set(topic_of))

    lines = []
    for w in vocab:
        topic = topic_of.get(w, "general")
        wrng = np.random.RandomState(zlib.crc32(w.encode()))
        v = CENTRE_SCALE[topic] * centres[topic] + 0.45 * wrng.standard_normal(DIM) / np.sqrt(DIM)
        lines.append(w + " " + " ".join(f"{x:.6f}" for x in v))

    out = ROOT / "data" / "toy_vectors.txt"
    out.write_text(f"{len(lines)} {DIM}\n" + "\n".join(lines) + "\n")
    print(f"wrote {len(lines)} vectors to {out}")


if __name__ == "__main__":
    main()
