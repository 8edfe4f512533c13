"""Build array specs from the text accepted by the CLI and the HTTP surface."""

from riordan_inversion.arrays.closed_forms import FamilyParam, family_spec
from riordan_inversion.arrays.exp_riordan import ExpRiordanSpec
from riordan_inversion.arrays.riordan import RiordanSpec
from riordan_inversion.core.expressions import parse_series
from riordan_inversion.core.series import SeriesSupplier

FAMILY_PREFIX = "family:"


def _component(text: str, which: str) -> SeriesSupplier:
    """A series expression, or ``family:NAME:param`` to borrow g or f from a family."""
    if text.strip().lower().startswith(FAMILY_PREFIX):
        spec = family_spec(FamilyParam.parse(text.strip()[len(FAMILY_PREFIX):]))
        return spec.g if which == "g" else spec.f
    return parse_series(text)


def ordinary_from_text(
    g: str | None = None, f: str | None = None, family: str | None = None
) -> RiordanSpec:
    if family:
        return family_spec(FamilyParam.parse(family))
    if not g or not f:
        raise ValueError("an ordinary array needs both g and f, or a family")
    return RiordanSpec(_component(g, "g"), _component(f, "f"))


def exponential_from_text(u: str | None, v: str | None) -> ExpRiordanSpec:
    if not u or not v:
        raise ValueError("an exponential array needs both u and v")
    return ExpRiordanSpec(parse_series(u), parse_series(v))
