"""Regenerates psi_first200.txt by brute force: every token string of length
up to 4 in (length, token order), kept when a recursive recognizer accepts it."""
import itertools
import sys

TOKENS = ["⊥", "⊤", "p"] + [str(d) for d in range(10)] + ["¬", "∧", "∨", "→", "↔", "(", ")"]
BINARY = {"∧", "∨", "→", "↔"}


def formula(s, i):
    """End index of a formula starting at i, or None."""
    if i >= len(s):
        return None
    t = s[i]
    if t in ("⊥", "⊤"):
        return i + 1
    if t == "p":
        j = i + 1
        if j >= len(s) or not s[j].isdigit():
            return None
        if s[j] == "0":
            return j + 1
        while j < len(s) and s[j].isdigit():
            j += 1
        return j
    if t == "¬":
        return formula(s, i + 1)
    if t == "(":
        j = formula(s, i + 1)
        if j is None or j >= len(s) or s[j] not in BINARY:
            return None
        k = formula(s, j + 1)
        if k is None or k >= len(s) or s[k] != ")":
            return None
        return k + 1
    return None


def well_formed(s):
    return formula(s, 0) == len(s)


def main():
    out = []
    for length in range(1, 5):
        for s in itertools.product(TOKENS, repeat=length):
            if well_formed(s):
                out.append("".join(s))
                if len(out) == 200:
                    sys.stdout.write("\n".join(out) + "\n")
                    return


if __name__ == "__main__":
    main()
