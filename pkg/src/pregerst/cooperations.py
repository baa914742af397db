"""The coproducts and exact checkers for every coalgebra law.

Five coproducts live here:

* delta_leibniz - the Leibniz cocrochet on tensor words: cut at every
  position, apply mu to the right part.
* delta_cocom   - the cocommutative coproduct on symmetric words: signed sum
  over proper two-block splits.
* delta_perm    - the permutative coproduct on pair words: the tail splits,
  the head keeps the first block, the second leg is re-expressed as a sum of
  pair words through the symmetric-to-pair embedding.
* kappa_prime   - the symmetrised cocrochet on symmetric words whose factors
  are tensor words: one factor is cut, the two halves distribute over the two
  legs in both orders.
* kappa         - the degree-one Leibniz cocrochet on pair words: the head
  splits in both orders plus a tail term through kappa_prime.

kappa and kappa_prime take a mu_legs switch.  With mu_legs=False (the
default) the cut-off part of a word enters the second leg as a plain word;
with mu_legs=True it enters through the antisymmetrised mu map, matching the
delta cocrochet shape.  Only the default satisfies the shifted coJacobi
identity: the mu cross-terms double some coefficients of the iterated
coproduct on heads of length three and the identity fails exactly by the
fully symmetrised triple-cut terms.  Both variants satisfy cosymmetry and
the three compatibility laws with the permutative coproduct, which do not
iterate kappa and cannot see the difference.

Every coproduct is linear and returns a TensorPowerElement(2).  Coproduct
legs that the formulas write as bare symmetric products are materialised as
pair-word elements via the embedding, so a coproduct on the pair-word space
really lands in (that space) tensor (that space) and laws can be iterated.

check_law expands both sides of a law to arity-3 (or 2) tensor powers,
subtracts, and reports the first nonzero defect exactly.  All voltes are
Koszul-signed in the law's grading view.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import SchemaError
from .grading import SHIFT1, SHIFT2, GradingView, rearrangement_sign
from .mutations import NO_MUTATIONS
from .words import (
    Element,
    Gen,
    Pair,
    Sym,
    Tensor,
    TensorPowerElement,
    degree,
    element_to_text,
    embed_sym_into_pair,
    is_pair_over_gens,
    is_pair_over_tensors,
    is_sym_of,
    is_tensor_of_gens,
    mu_word,
    sym_word,
    tpe_to_text,
)


class CoproductId(Enum):
    DELTA_LEIBNIZ = "delta_leibniz"
    DELTA_COCOM = "delta_cocom"
    DELTA_PERM = "delta_perm"
    KAPPA_PRIME = "kappa_prime"
    KAPPA = "kappa"


class LawId(Enum):
    COASSOC = "coassoc"
    COCOMM = "cocomm"
    LEIBNIZ_COALG = "leibniz_coalg"
    PERM_COALG = "perm_coalg"
    COJACOBI_DELTA = "cojacobi_delta"
    KAPPA_COSYM = "kappa_cosym"
    KAPPA_COJACOBI = "kappa_cojacobi"
    COMPAT_1 = "compat_1"
    COMPAT_2 = "compat_2"
    COMPAT_3 = "compat_3"


def _ordered_partitions(n, nonempty_first=False, nonempty_second=False):
    """Ordered splits (I, J) of range(n) as index tuples, deterministic order."""
    idx = range(n)
    for k in range(n + 1):
        if nonempty_first and k == 0:
            continue
        if nonempty_second and k == n:
            continue
        for left in combinations(idx, k):
            taken = set(left)
            right = tuple(i for i in idx if i not in taken)
            yield left, right


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------

def delta_leibniz(elem: Element, view: GradingView = SHIFT1,
                  mutations=NO_MUTATIONS) -> TensorPowerElement:
    """Leibniz cocrochet on tensor words; single letters map to zero."""
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not isinstance(word, Tensor):
            raise SchemaError("delta_leibniz expects tensor words")
        factors = word.factors
        n = len(factors)
        for k in range(1, n):
            left = Tensor(factors[:k])
            right = mu_word(Tensor(factors[k:]), view, mutations)
            for w, c in right.items():
                out.add_term((left, w), coeff * c)
    return out


def delta_concat(elem: Element) -> TensorPowerElement:
    """Plain deconcatenation on tensor words (coassociative, sign-free)."""
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not isinstance(word, Tensor):
            raise SchemaError("delta_concat expects tensor words")
        factors = word.factors
        for k in range(1, len(factors)):
            out.add_term((Tensor(factors[:k]), Tensor(factors[k:])), coeff)
    return out


def cocrochet_lie(elem: Element, view: GradingView = SHIFT1) -> TensorPowerElement:
    """Co-commutator (1 - volte) of the deconcatenation; coantisymmetric and
    satisfies coJacobi because deconcatenation is coassociative."""
    d = delta_concat(elem)
    return d - d.volte(0, view)


def delta_cocom(elem: Element, view: GradingView) -> TensorPowerElement:
    """Cocommutative coproduct on symmetric words: signed proper splits."""
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not isinstance(word, Sym):
            raise SchemaError("delta_cocom expects symmetric words")
        factors = word.factors
        degs = [degree(f, view) for f in factors]
        for left, right in _ordered_partitions(len(factors), True, True):
            sign = rearrangement_sign(degs, left + right)
            out.add_term(
                (Sym(tuple(factors[i] for i in left)),
                 Sym(tuple(factors[j] for j in right))),
                coeff * sign,
            )
    return out


def delta_perm(elem: Element, view: GradingView = SHIFT2,
               mutations=NO_MUTATIONS) -> TensorPowerElement:
    """Permutative coproduct on pair words.

    The tail splits into (I, J) with J nonempty; the head keeps I and the
    second leg is the symmetric word J pushed through the embedding.  A pair
    with an empty tail maps to zero.
    """
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not isinstance(word, Pair):
            raise SchemaError("delta_perm expects pair words")
        factors = word.tail.factors
        degs = [degree(f, view) for f in factors]
        for left, right in _ordered_partitions(len(factors), nonempty_second=True):
            sign = rearrangement_sign(degs, left + right)
            leg1 = Pair(word.head, Sym(tuple(factors[i] for i in left)))
            leg2_sym = Sym(tuple(factors[j] for j in right))
            for w, c in embed_sym_into_pair(leg2_sym, view, mutations).items():
                out.add_term((leg1, w), coeff * sign * c)
    return out


def _cuts(word: Tensor):
    """Proper splits of a tensor word into (left part, right part)."""
    factors = word.factors
    for cut in range(1, len(factors)):
        yield Tensor(factors[:cut]), Tensor(factors[cut:])


def _cut_leg(vpart: Tensor, mu_legs: bool, mutations) -> Element:
    if mu_legs:
        return mu_word(vpart, SHIFT1, mutations)
    return Element.single(vpart)


def kappa_prime_sym(elem: Element, view: GradingView = SHIFT2,
                    mutations=NO_MUTATIONS, mu_legs: bool = False) -> TensorPowerElement:
    """The symmetrised cocrochet, legs kept as raw symmetric words.

    For one factor X_s cut as U (x) V, the two legs are the symmetric
    products (X_I . U, V . X_J) and (X_I . V, U . X_J), each with the
    Koszul sign of the displayed rearrangement in which U, V replace X_s, a
    position prefix (-1)^{sum of deg' before s} and a cut sign (-1)^{deg' U}.
    Factors of tensor length one contribute nothing.
    """
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not (isinstance(word, Sym) and all(isinstance(f, Tensor) for f in word.factors)):
            raise SchemaError("kappa_prime expects symmetric words of tensor factors")
        factors = word.factors
        n = len(factors)
        degs = [degree(f, view) for f in factors]
        for s in range(n):
            if len(factors[s].factors) < 2:
                continue
            if mutations.kappa_prime_prefix_drop:
                prefix = 1
            else:
                prefix = -1 if sum(degs[:s]) & 1 else 1
            others = [i for i in range(n) if i != s]
            for upart, vpart in _cuts(factors[s]):
                up = degree(upart, view)
                vp = degree(vpart, view)
                cut_sign = -1 if up & 1 else 1
                mu_v = _cut_leg(vpart, mu_legs, mutations)
                # degree sequence with X_s replaced by the two halves
                ext = degs[:s] + [up, vp] + degs[s + 1:]
                pos = lambda i: i if i < s else i + 1
                for left, right in _ordered_partitions(len(others)):
                    idx_left = [others[i] for i in left]
                    idx_right = [others[j] for j in right]
                    order_uv = [pos(i) for i in idx_left] + [s, s + 1] + [pos(j) for j in idx_right]
                    order_vu = [pos(i) for i in idx_left] + [s + 1, s] + [pos(j) for j in idx_right]
                    sign_uv = rearrangement_sign(ext, order_uv)
                    sign_vu = rearrangement_sign(ext, order_vu)
                    left_words = [factors[i] for i in idx_left]
                    right_words = [factors[j] for j in idx_right]
                    base = coeff * prefix * cut_sign
                    # (X_I . U) (x) (mu V . X_J)
                    sa, lega = sym_word(left_words + [upart], view)
                    if lega is not None:
                        for w, c in mu_v.items():
                            sb, legb = sym_word([w] + right_words, view)
                            if legb is not None:
                                out.add_term((lega, legb), base * sign_uv * sa * sb * c)
                    # (X_I . mu V) (x) (U . X_J)
                    sb, legb = sym_word([upart] + right_words, view)
                    if legb is not None:
                        for w, c in mu_v.items():
                            sa, lega = sym_word(left_words + [w], view)
                            if lega is not None:
                                out.add_term((lega, legb), base * sign_vu * sa * sb * c)
    return out


def kappa_prime(elem: Element, view: GradingView = SHIFT2,
                mutations=NO_MUTATIONS, mu_legs: bool = False) -> TensorPowerElement:
    """kappa_prime with both legs materialised as pair-word elements."""
    raw = kappa_prime_sym(elem, view, mutations, mu_legs)
    out = TensorPowerElement(2)
    for (lega, legb), coeff in raw.items():
        for wa, ca in embed_sym_into_pair(lega, view, mutations).items():
            for wb, cb in embed_sym_into_pair(legb, view, mutations).items():
                out.add_term((wa, wb), coeff * ca * cb)
    return out


def kappa(elem: Element, view: GradingView = SHIFT2,
          mutations=NO_MUTATIONS, mu_legs: bool = False) -> TensorPowerElement:
    """Degree-one Leibniz cocrochet on pair words.

    Three parts: the head U (x) V splits with legs (U . tail_I, V . tail_J)
    taken in both orders, plus the tail term head (x) kappa_prime(tail).
    A single-generator head with empty tail maps to zero.
    """
    out = TensorPowerElement(2)
    for word, coeff in elem.items():
        if not isinstance(word, Pair) or not isinstance(word.head, Tensor):
            raise SchemaError("kappa expects pair words with tensor heads")
        head = word.head
        tail = word.tail.factors
        n = len(tail)
        tdegs = [degree(f, view) for f in tail]
        for upart, vpart in _cuts(head):
            up = degree(upart, view)
            vp = degree(vpart, view)
            if mutations.kappa_head_sign_drop:
                cut_sign = 1
            else:
                cut_sign = -1 if up & 1 else 1
            mu_v = _cut_leg(vpart, mu_legs, mutations)
            ext = [up, vp] + tdegs
            for left, right in _ordered_partitions(n):
                order_uv = [0] + [2 + i for i in left] + [1] + [2 + j for j in right]
                order_vu = [1] + [2 + j for j in right] + [0] + [2 + i for i in left]
                sign_uv = rearrangement_sign(ext, order_uv)
                sign_vu = rearrangement_sign(ext, order_vu)
                left_words = [tail[i] for i in left]
                right_words = [tail[j] for j in right]
                base = coeff * cut_sign
                # (U (x) tail_I) (x) embed(mu V . tail_J)
                sa, tail_i = sym_word(left_words, view)
                if tail_i is not None:
                    leg1 = Pair(upart, tail_i)
                    for w, c in mu_v.items():
                        sb, prod = sym_word([w] + right_words, view)
                        if prod is None:
                            continue
                        for pw, pc in embed_sym_into_pair(prod, view, mutations).items():
                            out.add_term((leg1, pw), base * sign_uv * sa * sb * c * pc)
                # (mu V (x) tail_J) (x) embed(U . tail_I)
                sb, tail_j = sym_word(right_words, view)
                if tail_j is not None:
                    sa, prod = sym_word([upart] + left_words, view)
                    if prod is not None:
                        emb = list(embed_sym_into_pair(prod, view, mutations).items())
                        for w, c in mu_v.items():
                            leg1 = Pair(w, tail_j)
                            for pw, pc in emb:
                                out.add_term((leg1, pw), base * sign_vu * sa * sb * c * pc)
        if n >= 1:
            x0p = degree(head, view)
            tail_sign = -1 if x0p & 1 else 1
            inner = kappa_prime_sym(Element.single(word.tail), view, mutations, mu_legs)
            for (lega, legb), c in inner.items():
                leg1 = Pair(head, lega)
                for pw, pc in embed_sym_into_pair(legb, view, mutations).items():
                    out.add_term((leg1, pw), coeff * tail_sign * c * pc)
    return out


# ---------------------------------------------------------------------------
# law checking
# ---------------------------------------------------------------------------

@dataclass
class LawCheck:
    law: LawId
    input_text: str
    defect: TensorPowerElement

    @property
    def ok(self) -> bool:
        return self.defect.is_zero()

    @property
    def defect_text(self) -> str:
        return "zero" if self.ok else tpe_to_text(self.defect)


def _as_word_coproduct(cop, view, mutations):
    return lambda w: cop(Element.single(w), view, mutations)


def _law_defect(law: LawId, elem: Element, view: GradingView,
                mutations=NO_MUTATIONS) -> TensorPowerElement:
    if law is LawId.COASSOC:
        d = delta_cocom(elem, view)
        cop = lambda w: delta_cocom(Element.single(w), view)
        return d.cosplit_leg(0, cop, 0, view) - d.cosplit_leg(1, cop, 0, view)
    if law is LawId.COCOMM:
        d = delta_cocom(elem, view)
        return d.volte(0, view) - d
    if law is LawId.LEIBNIZ_COALG:
        d = delta_leibniz(elem, view, mutations)
        cop = _as_word_coproduct(delta_leibniz, view, mutations)
        lhs = d.cosplit_leg(1, cop, 0, view)
        rhs = d.cosplit_leg(0, cop, 0, view)
        return lhs - rhs + rhs.volte(1, view)
    if law is LawId.PERM_COALG:
        d = delta_perm(elem, view, mutations)
        cop = _as_word_coproduct(delta_perm, view, mutations)
        a = d.cosplit_leg(1, cop, 0, view)
        return a - a.volte(1, view)
    if law is LawId.COJACOBI_DELTA:
        d = cocrochet_lie(elem, view)
        cop = lambda w: cocrochet_lie(Element.single(w), view)
        b = d.cosplit_leg(0, cop, 0, view)
        return b + b.volte(1, view).volte(0, view) + b.volte(0, view).volte(1, view)
    if law is LawId.KAPPA_COSYM:
        k = kappa_prime(elem, view, mutations)
        return k.volte(0, view) - k
    if law is LawId.KAPPA_COJACOBI:
        k = kappa(elem, view, mutations)
        cop = _as_word_coproduct(kappa, view, mutations)
        lhs = -k.cosplit_leg(1, cop, 1, view)
        rhs = k.cosplit_leg(0, cop, 1, view)
        return lhs - rhs - rhs.volte(1, view)
    delta_cop = _as_word_coproduct(delta_perm, view, mutations)
    kappa_cop = _as_word_coproduct(kappa, view, mutations)
    if law is LawId.COMPAT_1:
        d = delta_perm(elem, view, mutations)
        a = d.cosplit_leg(1, kappa_cop, 1, view)
        return a - a.volte(1, view)
    if law is LawId.COMPAT_2:
        k = kappa(elem, view, mutations)
        d = delta_perm(elem, view, mutations)
        lhs = k.cosplit_leg(1, delta_cop, 0, view)
        b = d.cosplit_leg(0, kappa_cop, 1, view)
        return lhs - b - b.volte(1, view)
    if law is LawId.COMPAT_3:
        k = kappa(elem, view, mutations)
        d = delta_perm(elem, view, mutations)
        lhs = k.cosplit_leg(0, delta_cop, 0, view)
        a = d.cosplit_leg(1, kappa_cop, 1, view)
        b = d.cosplit_leg(0, kappa_cop, 1, view)
        return lhs - a - b.volte(1, view)
    raise ValueError("unknown law %r" % law)


_LAW_DEFAULT_VIEW = {
    LawId.COASSOC: SHIFT1,
    LawId.COCOMM: SHIFT1,
    LawId.LEIBNIZ_COALG: SHIFT1,
    LawId.COJACOBI_DELTA: SHIFT1,
    LawId.PERM_COALG: SHIFT2,
    LawId.KAPPA_COSYM: SHIFT2,
    LawId.KAPPA_COJACOBI: SHIFT2,
    LawId.COMPAT_1: SHIFT2,
    LawId.COMPAT_2: SHIFT2,
    LawId.COMPAT_3: SHIFT2,
}

_LAW_SPACE_CHECK = {
    LawId.LEIBNIZ_COALG: (is_tensor_of_gens, "tensor words over generators"),
    LawId.COJACOBI_DELTA: (is_tensor_of_gens, "tensor words over generators"),
    LawId.KAPPA_COSYM: (
        lambda w: is_sym_of(w, is_tensor_of_gens),
        "symmetric words of tensor factors",
    ),
    LawId.PERM_COALG: (
        lambda w: is_pair_over_tensors(w) or is_pair_over_gens(w),
        "pair words",
    ),
    LawId.KAPPA_COJACOBI: (is_pair_over_tensors, "pair words with tensor heads"),
    LawId.COMPAT_1: (is_pair_over_tensors, "pair words with tensor heads"),
    LawId.COMPAT_2: (is_pair_over_tensors, "pair words with tensor heads"),
    LawId.COMPAT_3: (is_pair_over_tensors, "pair words with tensor heads"),
}


def check_law(law: LawId, elem: Element, view: GradingView = None,
              mutations=NO_MUTATIONS) -> LawCheck:
    """Expand both sides of the law on the given element and report the exact
    defect; zero defect means the law holds on this input."""
    if view is None:
        view = _LAW_DEFAULT_VIEW[law]
    space = _LAW_SPACE_CHECK.get(law)
    if space is not None:
        predicate, what = space
        for w in elem.terms:
            if not predicate(w):
                raise SchemaError("law %s needs %s" % (law.value, what))
    defect = _law_defect(law, elem, view, mutations)
    return LawCheck(law, element_to_text(elem), defect)
