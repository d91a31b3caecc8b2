"""
Integer-linear substitutions x -> sum of integer multiples of variables.

h is only additive, so these are the only substitutions that are sound at the identity level:
h(2x - z) = 2h(x) - h(z) holds for every additive map, h(x*z) = h(x)h(z) does not.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from njordan.errors import SubstitutionError
from njordan.freealg.parser import parse_expr
from njordan.freealg.poly import FreePoly, Mode, format_poly
from njordan.freealg.variables import var_id, var_name

LinearForm = dict[int, int]
ImageLike = Union[str, FreePoly, Mapping[int, int]]


def linear_form(image: FreePoly) -> LinearForm:
    form: LinearForm = {}
    for word, c in image.terms:
        if len(word) != 1:
            raise SubstitutionError(f"Substitution image {format_poly(image)!r} is not linear in the variables")
        if c.denominator != 1:
            raise SubstitutionError(f"Substitution image {format_poly(image)!r} has a non-integer coefficient")
        form[word[0]] = int(c)
    return form


def _to_form(image: ImageLike) -> LinearForm:
    if isinstance(image, str):
        return linear_form(parse_expr(image, Mode.NONCOMMUTATIVE))
    if isinstance(image, FreePoly):
        return linear_form(image)
    form: LinearForm = {}
    for v, c in image.items():
        if isinstance(c, Fraction) and c.denominator == 1:
            c = int(c)
        if not isinstance(c, int) or isinstance(c, bool):
            raise SubstitutionError(f"Substitution coefficient {c!r} is not an integer")
        if c:
            form[var_id(v) if isinstance(v, str) else v] = c
    return form


@dataclass(frozen=True)
class SubstitutionSpec:
    images: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Union[int, str], ImageLike]) -> "SubstitutionSpec":
        if isinstance(mapping, SubstitutionSpec):
            return mapping
        images = []
        for key, image in mapping.items():
            v = var_id(key) if isinstance(key, str) else key
            form = _to_form(image)
            images.append((v, tuple(sorted((u, c) for u, c in form.items() if c))))
        return cls(tuple(sorted(images)))

    def image(self, v: int) -> LinearForm | None:
        for key, form in self.images:
            if key == v:
                return dict(form)
        return None

    def image_poly(self, v: int, mode: Mode) -> FreePoly:
        form = self.image(v)
        if form is None:
            return FreePoly.variable(v, mode)
        return FreePoly.from_dict({(u,): c for u, c in form.items()}, mode)

    def to_text(self) -> dict[str, str]:
        return {
            var_name(v): format_poly(FreePoly.from_dict({(u,): c for u, c in form}))
            for v, form in self.images
        }

    def __str__(self):
        return ", ".join(f"{k} -> {v}" for k, v in self.to_text().items())


def substitute_linear(p: FreePoly, sigma: Union[SubstitutionSpec, Mapping]) -> FreePoly:
    sigma = SubstitutionSpec.of(sigma)
    images = {v: sigma.image_poly(v, p.mode) for v in p.variables()}
    result = FreePoly.zero(p.mode)
    for word, c in p.terms:
        expanded = FreePoly.constant(c, p.mode)
        for v in word:
            expanded = expanded * images[v]
        result = result + expanded
    return result
