"""The four cleaning rules, one at a time: drop link tokens, delete digits,
delete everything that is not a letter or whitespace, case-fold.

Run from the repository root:  python demos/02_preprocessing.py
"""

from sentimix import LanguageTag, Token, Tweet, normalize

CASES = [
    ["Achha", "hoga", "https//t.co/HmH8M7PTaK"],   # malformed link, still caught
    ["@AmitShah", "370ko", "!!"],                  # sigils and digits stripped in place
    ["Visit", "www.example.org", "NOW"],
    ["COOL", "story", "bro", "123"],
    ["नमस्ते।", "मौसम", "अच्छा"],                    # Devanagari; danda and matras are not letters
    ["123", "!!!", "..."],                         # nothing survives
]

for surfaces in CASES:
    tweet = Tweet(uid="demo", tokens=tuple(Token(s, LanguageTag.OTHER) for s in surfaces))
    clean = normalize(tweet)
    shown = repr(clean.value) + ("   <- emptied, kept anyway" if clean.emptied else "")
    print(f"{' '.join(surfaces):45s} -> {shown}")

# Cleaning is idempotent: feeding the clean words back through changes nothing.
tweet = Tweet(uid="demo", tokens=(Token("Mixed", LanguageTag.ENG), Token("B4g", LanguageTag.OTHER)))
once = normalize(tweet)
again = normalize(Tweet(uid="demo", tokens=tuple(Token(w, LanguageTag.OTHER) for w in once.words())))
print("\nidempotent:", once == again, "|", repr(once.value))
