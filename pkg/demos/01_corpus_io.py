"""Corpus IO walkthrough: parse the CONLL-style tweet format, poke at the
typed objects, and serialize back out.

Run from the repository root:  python demos/01_corpus_io.py
"""

from sentimix import class_distribution, language_distribution, parse_conll, write_conll

# The format is line-oriented: a meta header (uid + optional gold label),
# one token+language-tag pair per line, and a blank line to close the tweet.
RAW = """\
meta\t1\tpositive
All\tEng
India\tEng
me\tHin
nrc\tEng
lagu\tHin
kare\tHin

meta\t2\tnegative
Achha\tHin
hoga\tHin
https//t.co/HmH8M7PTaK\tO

meta\t3\tneutral
aaj\tHin
market\tEng
band\tHin

"""

corpus = parse_conll(RAW)
print(f"parsed {len(corpus)} tweets")
for tweet in corpus:
    surfaces = " ".join(t.surface for t in tweet.tokens)
    print(f"  uid={tweet.uid}  gold={tweet.gold.canonical_name:9s}  {surfaces}")

print("\nlabel counts:", {k.canonical_name: v for k, v in class_distribution(corpus).items()})
print("token language tags:", {k.name: v for k, v in language_distribution(corpus).items()})

# Serialization is canonical: parse(write(c)) == c, and writing a canonical
# file reproduces it byte for byte.
assert parse_conll(write_conll(corpus)) == corpus
print("\nround trip ok; canonical form below\n")
print(write_conll(corpus), end="")

# Unlabeled (test-set style) headers just omit the third field.
unlabeled = parse_conll("meta\tx\nkya\tHin\nbaat\tHin\n\n")
print("unlabeled tweet gold:", unlabeled.tweets[0].gold)
