"""Porter stemming algorithm (the original 1980 formulation).

Within each step the rule with the longest matching suffix is selected;
its condition is then tested, and if it fails no other rule in the step
fires.  Words of length <= 2 and tokens containing anything other than
ASCII letters pass through unchanged.
"""

from __future__ import annotations

_VOWELS = set("aeiou")


def _letter_types(word: str) -> list[bool]:
    """True at i where word[i] is a consonant."""
    types: list[bool] = []
    for i, ch in enumerate(word):
        if ch in _VOWELS:
            cons = False
        elif ch == "y":
            cons = True if i == 0 else not types[i - 1]
        else:
            cons = True
        types.append(cons)
    return types


def _measure(stem: str) -> int:
    """Number of vowel->consonant transitions: [C](VC)^m[V]."""
    types = _letter_types(stem)
    m = 0
    prev_cons = True
    started_vowel = False
    for cons in types:
        if not cons:
            started_vowel = True
        elif started_vowel and not prev_cons:
            m += 1
        prev_cons = cons
    return m


def _contains_vowel(stem: str) -> bool:
    return not all(_letter_types(stem))


def _ends_double_consonant(stem: str) -> bool:
    if len(stem) < 2 or stem[-1] != stem[-2]:
        return False
    return _letter_types(stem)[-1]


def _ends_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    types = _letter_types(stem)
    return types[-3] and not types[-2] and types[-1] and stem[-1] not in "wxy"


def _apply_rules(word: str, rules: list[tuple[str, str, object]]) -> str:
    """Pick the rule with the longest matching suffix; apply iff its
    condition (a measure threshold or predicate on the stem) holds."""
    best = None
    for suffix, replacement, condition in rules:
        if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = (suffix, replacement, condition)
    if best is None:
        return word
    suffix, replacement, condition = best
    stem = word[: len(word) - len(suffix)]
    if isinstance(condition, int):
        ok = _measure(stem) > condition
    else:
        ok = condition(stem)
    return stem + replacement if ok else word


_ALWAYS = lambda stem: True  # noqa: E731

_STEP2 = [
    ("ational", "ate", 0), ("tional", "tion", 0), ("enci", "ence", 0),
    ("anci", "ance", 0), ("izer", "ize", 0), ("abli", "able", 0),
    ("alli", "al", 0), ("entli", "ent", 0), ("eli", "e", 0),
    ("ousli", "ous", 0), ("ization", "ize", 0), ("ation", "ate", 0),
    ("ator", "ate", 0), ("alism", "al", 0), ("iveness", "ive", 0),
    ("fulness", "ful", 0), ("ousness", "ous", 0), ("aliti", "al", 0),
    ("iviti", "ive", 0), ("biliti", "ble", 0),
]

_STEP3 = [
    ("icate", "ic", 0), ("ative", "", 0), ("alize", "al", 0),
    ("iciti", "ic", 0), ("ical", "ic", 0), ("ful", "", 0), ("ness", "", 0),
]

_STEP4 = [
    ("al", "", 1), ("ance", "", 1), ("ence", "", 1), ("er", "", 1),
    ("ic", "", 1), ("able", "", 1), ("ible", "", 1), ("ant", "", 1),
    ("ement", "", 1), ("ment", "", 1), ("ent", "", 1),
    ("ion", "", lambda stem: _measure(stem) > 1 and stem[-1:] in ("s", "t")),
    ("ou", "", 1), ("ism", "", 1), ("ate", "", 1), ("iti", "", 1),
    ("ous", "", 1), ("ive", "", 1), ("ize", "", 1),
]


def stem(word: str) -> str:
    word = word.lower()
    if len(word) <= 2 or not word.isascii() or not word.isalpha():
        return word

    # step 1a
    word = _apply_rules(word, [
        ("sses", "ss", _ALWAYS), ("ies", "i", _ALWAYS),
        ("ss", "ss", _ALWAYS), ("s", "", _ALWAYS),
    ])

    # step 1b
    if word.endswith("eed"):
        stem_ = word[:-3]
        if _measure(stem_) > 0:
            word = stem_ + "ee"
    else:
        fired = False
        for suffix in ("ed", "ing"):
            if word.endswith(suffix):
                stem_ = word[: len(word) - len(suffix)]
                if _contains_vowel(stem_):
                    word = stem_
                    fired = True
                break
        if fired:
            if word.endswith(("at", "bl", "iz")):
                word += "e"
            elif _ends_double_consonant(word) and word[-1] not in "lsz":
                word = word[:-1]
            elif _measure(word) == 1 and _ends_cvc(word):
                word += "e"

    # step 1c
    if word.endswith("y") and _contains_vowel(word[:-1]):
        word = word[:-1] + "i"

    word = _apply_rules(word, _STEP2)
    word = _apply_rules(word, _STEP3)
    word = _apply_rules(word, _STEP4)

    # step 5a
    if word.endswith("e"):
        stem_ = word[:-1]
        m = _measure(stem_)
        if m > 1 or (m == 1 and not _ends_cvc(stem_)):
            word = stem_

    # step 5b
    if _measure(word) > 1 and _ends_double_consonant(word) and word.endswith("l"):
        word = word[:-1]

    return word
