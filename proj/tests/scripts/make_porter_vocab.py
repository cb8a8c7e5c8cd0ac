#!/usr/bin/env python3
"""Builds a Porter reference vocabulary (voc.txt) and expected stems (output.txt).

Stems come from NLTK's PorterStemmer in MARTIN_EXTENSIONS mode, an independent
implementation that reproduces Martin Porter's reference C program. The word
list is a seeded sample of the `english-words` web2 list plus the classic
examples from Porter's article.

    pip install nltk english-words
"""
import random
import sys
from pathlib import Path

from english_words import get_english_words_set
from nltk.stem.porter import PorterStemmer

SAMPLE = 20000
SEED = 1980

CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing happy sky
relational conditional rational valenci hesitanci digitizer conformabli radicalli
differentli vileli analogousli vietnamization predication operator feudalism decisiveness
hopefulness callousness formaliti sensitiviti sensibiliti triplicate formative formalize
electriciti electrical hopeful goodness revival allowance inference airliner gyroscopic
adjustable defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate cease
controll roll generalizations oscillators running runners ran run""".split()


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    words = sorted(w for w in get_english_words_set(["web2"], lower=True)
                   if w.isascii() and w.isalpha())
    sample = set(random.Random(SEED).sample(words, SAMPLE)) | set(CLASSIC)
    vocab = sorted(sample)
    stemmer = PorterStemmer(PorterStemmer.MARTIN_EXTENSIONS)
    (out / "voc.txt").write_text("\n".join(vocab) + "\n")
    (out / "output.txt").write_text("\n".join(stemmer.stem(w) for w in vocab) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).parent.parent / "data" / "porter"))
