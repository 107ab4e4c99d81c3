#!/usr/bin/env python3
"""Builds a word<TAB>sense_count lexicon from WordNet via NLTK.

    pip install nltk && python -m nltk.downloader wordnet
    python tools/scripts/make_sense_lexicon.py > sense_counts_full.tsv

Only single lowercase alphabetic lemmas are written. The count is the number
of synsets across all parts of speech.
"""
import argparse
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-o", "--out", help="output path (default stdout)")
    args = ap.parse_args()
    try:
        from nltk.corpus import wordnet as wn
        wn.ensure_loaded()
    except (ImportError, LookupError) as e:
        print(f"WordNet unavailable: {e}", file=sys.stderr)
        return 1

    counts = {}
    for lemma in wn.all_lemma_names():
        if lemma.isalpha() and lemma.isascii() and lemma.islower():
            counts[lemma] = len(wn.synsets(lemma))

    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    with out:
        out.write("# word\tsense_count, from WordNet\n")
        for word in sorted(counts):
            out.write(f"{word}\t{counts[word]}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
