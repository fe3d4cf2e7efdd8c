"""Field-spec JSON: defining polynomial, optional unit data and the twisting element.

Rationals are strings "p/q" (integers also accepted).  Every validation error
carries a JSON pointer to the offending entry.
"""

import json
from dataclasses import dataclass

from ._mp import decimal
from .algnum import NumberField, format_rational, parse_rational
from .errors import ValidationError
from .forms import BinaryForm
from .units import UnitBasis


@dataclass
class FieldSpec:
    field: NumberField
    alpha: object
    units: object
    raw: dict


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}", "") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc.msg} at line {exc.lineno}", "") from None


def _coords(field, value, pointer):
    if not isinstance(value, list) or len(value) != field.degree:
        raise ValidationError(f"expected a list of {field.degree} rationals", pointer)
    return field.element([parse_rational(v, f"{pointer}/{i}") for i, v in enumerate(value)])


def _int_list(value, pointer):
    if not isinstance(value, list) or not value:
        raise ValidationError("expected a nonempty list of integers", pointer)
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError("expected an integer", f"{pointer}/{i}")
    return value


def parse_field_spec(obj, precision_bits=128):
    if not isinstance(obj, dict):
        raise ValidationError("field spec must be a JSON object", "")
    if "min_poly" not in obj:
        raise ValidationError("missing required key", "/min_poly")
    coeffs = _int_list(obj["min_poly"], "/min_poly")
    status = obj.get("irreducibility", "asserted")
    if status not in ("verified", "asserted"):
        raise ValidationError("must be 'verified' or 'asserted'", "/irreducibility")
    field = NumberField(coeffs, require_verified=status == "verified")
    alpha = _coords(field, obj["alpha"], "/alpha") if "alpha" in obj else field.gen
    if alpha.is_zero():
        raise ValidationError("alpha must be nonzero", "/alpha")
    units = None
    if "fundamental_units" in obj:
        raw_units = obj["fundamental_units"]
        if not isinstance(raw_units, list):
            raise ValidationError("expected a list of unit coordinate lists", "/fundamental_units")
        fund = [_coords(field, u, f"/fundamental_units/{i}") for i, u in enumerate(raw_units)]
        torsion = (_coords(field, obj["torsion_generator"], "/torsion_generator")
                   if "torsion_generator" in obj else field.rational(-1))
        w = obj.get("torsion_order", 2)
        if isinstance(w, bool) or not isinstance(w, int):
            raise ValidationError("expected an integer", "/torsion_order")
        reg = obj.get("regulator")
        if reg is not None:
            try:
                reg = float(reg)
            except (TypeError, ValueError):
                raise ValidationError("expected a decimal string", "/regulator") from None
        units = UnitBasis(field, fund, torsion, w, reg, precision_bits=precision_bits)
    return FieldSpec(field, alpha, units, obj)


def load_field_spec(path, precision_bits=128):
    return parse_field_spec(read_json(path), precision_bits)


def require_units(spec):
    if spec.units is None:
        raise ValidationError("this command needs unit data", "/fundamental_units")
    return spec.units


def dump_field_spec(field, alpha=None, units=None):
    out = {"min_poly": list(field.coeffs), "irreducibility": field.irreducibility}
    if alpha is not None:
        out["alpha"] = [format_rational(c) for c in alpha.coords]
    if units is not None:
        out["fundamental_units"] = [[format_rational(c) for c in u.coords] for u in units.fundamental_units]
        out["torsion_generator"] = [format_rational(c) for c in units.torsion_generator.coords]
        out["torsion_order"] = units.torsion_order
        out["regulator"] = decimal(units.regulator, 25)
    return out


def parse_form(obj):
    """A form is either a bare coefficient list or {"form": [...]}."""
    if isinstance(obj, dict):
        if "form" not in obj:
            raise ValidationError("missing required key", "/form")
        return BinaryForm(tuple(_int_list(obj["form"], "/form")))
    return BinaryForm(tuple(_int_list(obj, "")))
