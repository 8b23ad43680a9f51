#!/usr/bin/env python3
"""Build the 50-tweet cleaning fixture and its golden output.

The golden TSV is produced by a from-scratch application of the four
cleaning rules written here, independent of the package implementation.
Writes tests/data/preprocess_fixture.conll and tests/data/preprocess_golden.tsv.
"""

import unicodedata
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

# (uid, label or None, [(surface, tag), ...])
TWEETS = [
    ("p01", "positive", [("Achha", "Hin"), ("hoga", "Hin"), ("https//t.co/HmH8M7PTaK", "O")]),
    ("p02", "positive", [("@AmitShah", "O"), ("370ko", "Hin"), ("!!", "O")]),
    ("p03", None, [("All", "Eng"), ("India", "Eng"), ("me", "Hin"), ("nrc", "Eng"), ("lagu", "Hin"), ("kare", "Hin")]),
    ("p04", "negative", [("television", "Eng"), ("media", "Eng"), ("congress", "Eng"), ("ke", "Hin"), ("liye", "Hin"), ("nhi", "Hin"), ("h", "Hin"), (".", "O")]),
    ("p05", "neutral", [("jaaz", "Hin"), ("saab", "Hin"), ("ko", "Hin"), ("salo", "Hin"), ("saal", "Hin"), ("*", "O")]),
    ("p06", None, [("https://example.com/page", "O"), ("ok", "Eng")]),
    ("p07", None, [("http://News.Site/x?y=1", "O"), ("dekho", "Hin")]),
    ("p08", None, [("HTTPS://UPPER.CASE/ABC", "O"), ("fir", "Hin"), ("bhi", "Hin")]),
    ("p09", None, [("www.news18.com", "O"), ("par", "Hin"), ("aaya", "Hin")]),
    ("p10", None, [("WWW.SHOUTING.ORG", "O"), ("kya", "Hin")]),
    ("p11", None, [("xt.co/abcd", "O"), ("mila", "Hin")]),
    ("p12", None, [("T.CO/UPPER", "O"), ("sahi", "Hin")]),
    ("p13", None, [("123", "O"), ("!!!", "O")]),
    ("p14", None, [("42", "O"), ("@", "O"), ("#", "O")]),
    ("p15", None, [("२०२०", "O"), ("में", "Hin"), ("चुनाव", "Hin")]),
    ("p16", None, [("a1b2c3", "Eng"), ("x9", "Eng")]),
    ("p17", None, [("#Cricket", "O"), ("@narendramodi", "O"), ("zindabad", "Hin")]),
    ("p18", None, [("don't", "Eng"), ("co-operate", "Eng")]),
    ("p19", None, [("kya...", "Hin"), ("baat!!", "Hin")]),
    ("p20", None, [("😀", "O"), ("❤️", "O"), ("great", "Eng")]),
    ("p21", None, [("STRASSE", "Eng"), ("groß", "Eng")]),
    ("p22", None, [("İstanbul", "Eng"), ("ILIKE", "Eng")]),
    ("p23", None, [("ǅungla", "Eng"), ("Mix", "Eng")]),
    ("p24", None, [("Καλημέρα", "O"), ("Привет", "O"), ("天気", "O")]),
    ("p25", None, [("नमस्ते।", "Hin"), ("मौसम", "Hin")]),
    ("p26", "neutral", [("aaj", "Hin"), ("ka", "Hin"), ("Mausam", "Hin"), ("Theek", "Hin"), ("hai", "Hin")]),
    ("p27", "positive", [("Bahut", "Hin"), ("Badhiya", "Hin"), ("Match", "Eng"), ("tha", "Hin"), ("5-0", "O")]),
    ("p28", "negative", [("Ye", "Hin"), ("Bakwas", "Hin"), ("hai", "Hin"), ("100%", "O")]),
    ("p29", None, [("mile stone", "Eng"), ("done", "Eng")]),
    ("p30", None, [("under_score", "Eng"), ("CamelCase", "Eng")]),
    ("p31", None, [("3.14", "O"), ("pi", "Eng"), ("hai", "Hin")]),
    ("p32", None, [("₹500", "O"), ("ka", "Hin"), ("note", "Eng")]),
    ("p33", None, [("50%", "O"), ("off", "Eng"), ("sale", "Eng")]),
    ("p34", None, [("E=mc²", "Eng"), ("physics", "Eng")]),
    ("p35", None, [("(bracket)", "O"), ("[square]", "O"), ("{curly}", "O")]),
    ("p36", None, [("semi;colon", "Eng"), ("comma,here", "Eng")]),
    ("p37", None, [("ek2teen", "Hin"), ("chaar4", "Hin"), ("5paanch", "Hin")]),
    ("p38", None, [("RT", "Eng"), ("@user:", "O"), ("Follow", "Eng"), ("kare", "Hin")]),
    ("p39", None, [("hुst", "Hin"), ("matra", "Hin")]),
    ("p40", None, [("Q&A", "Eng"), ("session", "Eng")]),
    ("p41", None, [("yaar~", "Hin"), ("kyun?", "Hin")]),
    ("p42", None, [("multi", "Eng"), ("https//t.co/a", "O"), ("link", "Eng"), ("https//t.co/b", "O")]),
    ("p43", None, [("sirf", "Hin"), ("URL", "Eng"), ("https://t.co/XYZ", "O")]),
    ("p44", None, [("mix³sup", "Eng"), ("half½val", "Eng")]),
    ("p45", None, [("Tab  inside", "Eng"), ("words", "Eng")]),
    ("p46", None, [("it's", "Eng"), ("a'b'c", "Eng")]),
    ("p47", "neutral", [("Office", "Eng"), ("9", "O"), ("baje", "Hin"), ("khulta", "Hin")]),
    ("p48", None, [("👍👍", "O"), ("nice", "Eng")]),
    ("p49", None, [("0", "O"), (".", "O"), ("-", "O")]),
    ("p50", None, [("ẞharp", "Eng"), ("ss", "Eng")]),
]


def is_link(token):
    low = token.lower()
    return low.startswith("http://") or low.startswith("https://") or low.startswith("www.") or "t.co/" in low


def clean_token(token):
    kept = []
    for ch in token:
        if unicodedata.category(ch) == "Nd":
            continue
        if unicodedata.category(ch).startswith("L") or ch.isspace():
            kept.append(ch)
    folded = "".join(kept).casefold()
    return "".join(
        ch for ch in folded if unicodedata.category(ch).startswith("L") or ch.isspace()
    )


def clean_tweet(tokens):
    words = []
    for surface, _tag in tokens:
        if is_link(surface):
            continue
        words.extend(clean_token(surface).split())
    return " ".join(words)


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    conll, golden = [], ["uid\tclean_text"]
    for uid, label, tokens in TWEETS:
        conll.append(f"meta\t{uid}\t{label}" if label else f"meta\t{uid}")
        conll.extend(f"{surface}\t{tag}" for surface, tag in tokens)
        conll.append("")
        golden.append(f"{uid}\t{clean_tweet(tokens)}")
    (OUT_DIR / "preprocess_fixture.conll").write_text("\n".join(conll) + "\n", encoding="utf-8")
    (OUT_DIR / "preprocess_golden.tsv").write_text("\n".join(golden) + "\n", encoding="utf-8")
    print(f"wrote preprocess fixture ({len(TWEETS)} tweets) and golden TSV")


if __name__ == "__main__":
    main()
