"""
Textual Input Grammars
Gamma specs (Z^l, Fl, fp:<gens>|<relators>), integer lists, group names and table files
"""

import json
import re
import string
from typing import Optional, Tuple

from euler_errors import GammaSpecError, UnsupportedGroup
from groups import FREE, ZPOW, FiniteGroup, GammaGroup, IsotropyClass, Presentation

_ZPOW_RE = re.compile(r'^Z(?:\^(\d+))?$')
_FREE_RE = re.compile(r'^F(\d+)$')
_GROUP_PARAM_RE = re.compile(r'^(cyclic|dihedral):(\d+)$')


def parse_gamma(text: str) -> GammaGroup:
    """
    "Z^2", "Z" (= Z^1), "F3", or "fp:a,b|aa,bb,abab". In a presentation, gens are single
    lowercase letters and an uppercase letter is the inverse of its generator.
    """
    text = text.strip()
    match = _ZPOW_RE.match(text)
    if match:
        return GammaGroup.z_pow(_positive(match.group(1) or '1', text))
    match = _FREE_RE.match(text)
    if match:
        return GammaGroup.free(_positive(match.group(1), text))
    if text.startswith('fp:'):
        return GammaGroup.presented(_parse_presentation(text[3:], text))
    raise GammaSpecError(f"Cannot parse Gamma {text!r}: expected Z^l, Fl or fp:<gens>|<relators>")


def _positive(digits: str, text: str) -> int:
    value = int(digits)
    if value < 1:
        raise GammaSpecError(f"{text!r}: l must be at least 1")
    return value


def _parse_presentation(body: str, text: str) -> Presentation:
    if '|' not in body:
        raise GammaSpecError(f"{text!r}: missing '|' between generators and relators")
    gens_part, relators_part = body.split('|', 1)
    names = tuple(g.strip() for g in gens_part.split(',')) if gens_part.strip() else ()
    if not names:
        raise GammaSpecError(f"{text!r}: a presentation needs at least one generator")
    for name in names:
        if len(name) != 1 or name not in string.ascii_lowercase:
            raise GammaSpecError(f"{text!r}: generator {name!r} must be a single lowercase letter")
    if len(set(names)) != len(names):
        raise GammaSpecError(f"{text!r}: repeated generator")

    index = {name: i + 1 for i, name in enumerate(names)}
    relators = []
    if relators_part.strip():
        for word in relators_part.split(','):
            word = word.strip()
            if not word:
                raise GammaSpecError(f"{text!r}: empty relator")
            encoded = []
            for letter in word:
                if letter.lower() not in index:
                    raise GammaSpecError(f"{text!r}: unknown letter {letter!r} in relator {word!r}")
                encoded.append(index[letter] if letter.islower() else -index[letter.lower()])
            relators.append(tuple(encoded))
    return Presentation(len(names), tuple(relators), names)


def format_gamma(gamma: GammaGroup) -> str:
    """Inverse of parse_gamma"""
    if gamma.kind == ZPOW:
        return f"Z^{gamma.rank}"
    if gamma.kind == FREE:
        return f"F{gamma.rank}"
    p = gamma.presentation
    names = p.generator_names or tuple(string.ascii_lowercase[:p.generator_count])
    words = [''.join(names[i - 1] if i > 0 else names[-i - 1].upper() for i in word)
             for word in p.relators]
    return f"fp:{','.join(names)}|{','.join(words)}"


def parse_int_list(text: str, what: str = "weights") -> Tuple[int, ...]:
    """Comma-separated integers, leading minus allowed; the empty string is the empty list"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(item.strip()) for item in text.split(','))
    except ValueError:
        raise GammaSpecError(f"Cannot parse {what} {text!r}: expected comma-separated integers")


def parse_alphas(text: str) -> Tuple[int, ...]:
    alphas = parse_int_list(text, "O(2) weights")
    for alpha in alphas:
        if alpha < 1:
            raise GammaSpecError(f"O(2) weights must be positive, got {alpha}")
    return alphas


def load_table_file(path: str) -> FiniteGroup:
    """JSON {"name": str, "table": [[int, ...], ...]}"""
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise GammaSpecError(f"Cannot read group table {path}: {e}")
    if not isinstance(data, dict) or not isinstance(data.get('table'), list):
        raise GammaSpecError(f"{path}: expected an object with a 'table' list")
    rows = data['table']
    if not all(isinstance(row, list) and all(isinstance(x, int) for x in row) for row in rows):
        raise GammaSpecError(f"{path}: table rows must be lists of integers")
    return FiniteGroup.from_table(rows, str(data.get('name', path)))


def parse_group(text: str, gamma: Optional[GammaGroup] = None,
                user_value: Optional[int] = None) -> IsotropyClass:
    """
    trivial | S1 | O2 | cyclic:m | dihedral:m | table:<json file>. Any other name needs a
    user-supplied value at gamma.
    """
    text = text.strip()
    lowered = text.lower()
    if lowered == 'trivial':
        return IsotropyClass.trivial()
    if lowered in ('s1', 'so2'):
        return IsotropyClass.circle()
    if lowered == 'o2':
        return IsotropyClass.full_o2()
    match = _GROUP_PARAM_RE.match(lowered)
    if match:
        family, m = match.group(1), int(match.group(2))
        if family == 'cyclic':
            return IsotropyClass.cyclic(m)
        if m < 1:
            raise GammaSpecError(f"{text!r}: dihedral index must be at least 1")
        return IsotropyClass.dihedral(m)
    if text.startswith('table:'):
        return IsotropyClass.finite_table(load_table_file(text[len('table:'):]))
    if user_value is None or gamma is None:
        raise UnsupportedGroup(f"Group {text!r} is not supported; pass a user-supplied value to use it")
    return IsotropyClass.user_supplied(text, {gamma: user_value})
