#!/usr/bin/env python3
"""Regenerate data/script_classes.tsv from UCD character names.

Covers the Devanagari (U+0900..U+097F) and Telugu (U+0C00..U+0C7F) blocks.
Unassigned code points are omitted; the library maps them to (Other, Unknown).
"""
import sys
import unicodedata

# Assigned after the UCD version bundled with older Pythons.
EXTRA_NAMES = {
    0x0C3C: "TELUGU SIGN NUKTA",
    0x0C5D: "TELUGU LETTER NAKAARA POLLU",
}

# Vowel signs with no independent-letter counterpart behave as modifiers.
MODIFIER_SIGNS = {0x094E, 0x0955}


def name_of(cp):
    return EXTRA_NAMES.get(cp) or unicodedata.name(chr(cp), "")


def classify(cp, name):
    if cp in MODIFIER_SIGNS:
        return "Modifier"
    if " VOWEL SIGN " in name:
        return "DependentVowelSign"
    if name.endswith(" SIGN VIRAMA"):
        return "Virama"
    if name.endswith(" SIGN NUKTA"):
        return "Nukta"
    if " DIGIT " in name:
        return "Digit"
    if " LETTER " in name:
        letter = name.split(" LETTER ", 1)[1]
        vowels = ("A", "AA", "I", "II", "U", "UU", "VOCALIC R", "VOCALIC RR",
                  "VOCALIC L", "VOCALIC LL", "E", "EE", "AI", "O", "OO", "AU",
                  "CANDRA A", "CANDRA E", "CANDRA O", "SHORT A", "SHORT E",
                  "SHORT O", "OE", "OOE", "AW", "UE", "UUE")
        if letter in vowels:
            return "IndependentVowel"
        return "Consonant"
    if any(s in name for s in ("CANDRABINDU", "ANUSVARA", "VISARGA", "AVAGRAHA",
                               "STRESS SIGN", "ACCENT", "LENGTH MARK",
                               "HIGH SPACING DOT", "TUUMU")):
        return "Modifier"
    return "Punctuation"


def main(out):
    rows = []
    for script, lo in (("Devanagari", 0x0900), ("Telugu", 0x0C00)):
        for cp in range(lo, lo + 0x80):
            name = name_of(cp)
            if not name:
                continue
            rows.append((cp, script, classify(cp, name), name))
    with open(out, "w", encoding="utf-8") as f:
        f.write("# codepoint\tscript\tclass\t(name)\n")
        f.write("# generated by tools/gen_script_classes.py\n")
        for cp, script, cls, name in rows:
            f.write(f"{cp:04X}\t{script}\t{cls}\t# {name}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/script_classes.tsv")
