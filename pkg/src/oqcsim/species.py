"""Ion-species registry: energy levels, lifetimes, U(2) data, level roles.

Level data is loaded from a JSON file with one record per level or
transition (schema ``oqcsim-species-v1``, documented in the README).
A registry pre-seeded with the built-in ions ships with the package;
user files are merged on top of it.

Role assignment convention: every scheme has exactly one level at
0 cm^-1 (the energy reference).  The ``role`` field marks how a level
is used by a gate protocol -- ``qubit0``/``qubit1`` levels should have
small squared diagonal U(2) elements, ``auxiliary`` levels large ones,
``ground`` marks a separate reservoir level |g> where the protocol uses
one, and ``unassigned`` levels take no part.
"""
from __future__ import annotations

import enum
import io
import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ParseError, RegistryLookupError, ValidationError

SCHEMA_NAME = "oqcsim-species-v1"


class LevelRole(enum.Enum):
    GROUND = "ground"
    QUBIT0 = "qubit0"
    QUBIT1 = "qubit1"
    AUXILIARY = "auxiliary"
    UNASSIGNED = "unassigned"


@dataclass(frozen=True)
class EnergyLevel:
    """One electronic level of an ion.

    energy is in cm^-1 above the scheme's ground level; lifetime (s) and
    u2_diag_sq (squared diagonal U(2) element) are optional because the
    source data does not quote them for every level.
    """

    term_symbol: str
    energy: float
    lifetime: float | None = None
    lifetime_host: str | None = None
    u2_diag_sq: float | None = None
    role: LevelRole = LevelRole.UNASSIGNED
    note: str | None = None

    def __post_init__(self):
        if self.energy < 0:
            raise ValidationError(f"{self.term_symbol}: energy must be >= 0 cm^-1")
        if self.lifetime is not None and self.lifetime <= 0:
            raise ValidationError(f"{self.term_symbol}: lifetime must be > 0 s")
        if self.u2_diag_sq is not None and self.u2_diag_sq < 0:
            raise ValidationError(f"{self.term_symbol}: u2_diag_sq must be >= 0")


@dataclass(frozen=True)
class TransitionDatum:
    """Inter-level transition record; uk_sq maps rank (2, 4, 6) to |U(k)|^2."""

    from_level: str
    to_level: str
    uk_sq: Mapping[int, float] = field(default_factory=dict)
    radiative_rate: float | None = None

    def __post_init__(self):
        if self.from_level == self.to_level:
            raise ValidationError("transition endpoints must differ")
        for k, v in self.uk_sq.items():
            if k not in (2, 4, 6):
                raise ValidationError(f"U(k) rank must be 2, 4 or 6, got {k}")
            if v < 0:
                raise ValidationError("uk_sq values must be >= 0")


@dataclass(frozen=True)
class SpeciesScheme:
    """All level and transition data for one (species, host) pair."""

    species_name: str
    host: str
    levels: tuple[EnergyLevel, ...]
    transitions: tuple[TransitionDatum, ...] = ()

    def __post_init__(self):
        names = [lv.term_symbol for lv in self.levels]
        if len(set(names)) != len(names):
            raise ValidationError(f"{self.species_name}: duplicate level names")
        at_zero = [lv for lv in self.levels if lv.energy == 0.0]
        if len(at_zero) != 1:
            raise ValidationError(
                f"{self.species_name}: exactly one level must sit at 0 cm^-1, found {len(at_zero)}"
            )
        for role in (LevelRole.QUBIT0, LevelRole.QUBIT1, LevelRole.AUXILIARY):
            n = sum(1 for lv in self.levels if lv.role is role)
            if n > 1:
                raise ValidationError(f"{self.species_name}: role {role.value} assigned {n} times")
        known = set(names)
        for tr in self.transitions:
            if tr.from_level not in known or tr.to_level not in known:
                raise ValidationError(
                    f"{self.species_name}: transition {tr.from_level}->{tr.to_level} "
                    "references an unknown level"
                )

    @property
    def ground_level(self) -> EnergyLevel:
        return next(lv for lv in self.levels if lv.energy == 0.0)

    def level(self, term_symbol: str) -> EnergyLevel:
        for lv in self.levels:
            if lv.term_symbol == term_symbol:
                return lv
        raise RegistryLookupError(f"{self.species_name} has no level {term_symbol!r}")

    def role_level(self, role: LevelRole) -> EnergyLevel | None:
        for lv in self.levels:
            if lv.role is role:
                return lv
        return None

    def with_roles(self, roles: Mapping[str, LevelRole | str]) -> "SpeciesScheme":
        """Return a copy with roles reassigned (alternative protocol schemes).

        Levels not named in ``roles`` are reset to unassigned.
        """
        wanted = {k: (LevelRole(v) if isinstance(v, str) else v) for k, v in roles.items()}
        for name in wanted:
            self.level(name)  # raises on unknown level
        new_levels = tuple(
            replace(lv, role=wanted.get(lv.term_symbol, LevelRole.UNASSIGNED))
            for lv in self.levels
        )
        return replace(self, levels=new_levels)


@dataclass(frozen=True)
class LevelDiagnostic:
    term_symbol: str
    role: LevelRole
    status: str          # "ok" | "warning" | "fail"
    message: str


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    diagnostics: tuple[LevelDiagnostic, ...]

    def failures(self) -> list[LevelDiagnostic]:
        return [d for d in self.diagnostics if d.status == "fail"]

    def warnings(self) -> list[LevelDiagnostic]:
        return [d for d in self.diagnostics if d.status == "warning"]


def validate_scheme(scheme: SpeciesScheme, u2_threshold: float = 1.0) -> ValidationReport:
    """Check that role assignments respect the small/large U(2) rule.

    Qubit levels must have u2_diag_sq below the threshold, auxiliary
    levels at or above it.  Levels whose U(2) data is absent are assumed
    small and produce a warning rather than a failure.
    """
    diags: list[LevelDiagnostic] = []
    for lv in scheme.levels:
        if lv.role in (LevelRole.QUBIT0, LevelRole.QUBIT1):
            if lv.u2_diag_sq is None:
                diags.append(LevelDiagnostic(
                    lv.term_symbol, lv.role, "warning",
                    "no U(2) data; assumed small"))
            elif lv.u2_diag_sq >= u2_threshold:
                diags.append(LevelDiagnostic(
                    lv.term_symbol, lv.role, "fail",
                    f"qubit level has large U(2) element {lv.u2_diag_sq} >= {u2_threshold}"))
            else:
                diags.append(LevelDiagnostic(lv.term_symbol, lv.role, "ok", "small U(2) element"))
        elif lv.role is LevelRole.AUXILIARY:
            if lv.u2_diag_sq is None:
                diags.append(LevelDiagnostic(
                    lv.term_symbol, lv.role, "warning",
                    "no U(2) data on auxiliary level"))
            elif lv.u2_diag_sq < u2_threshold:
                diags.append(LevelDiagnostic(
                    lv.term_symbol, lv.role, "fail",
                    f"auxiliary level has small U(2) element {lv.u2_diag_sq} < {u2_threshold}"))
            else:
                diags.append(LevelDiagnostic(lv.term_symbol, lv.role, "ok", "large U(2) element"))
    passed = not any(d.status == "fail" for d in diags)
    return ValidationReport(passed, tuple(diags))


def transition_frequency(scheme: SpeciesScheme, level_a: str, level_b: str) -> float:
    """|E_a - E_b| in cm^-1 between two named levels."""
    return abs(scheme.level(level_a).energy - scheme.level(level_b).energy)


class SpeciesRegistry:
    """Immutable collection of species schemes keyed by (name, host)."""

    def __init__(self, schemes: Iterable[SpeciesScheme]):
        self._schemes: dict[tuple[str, str], SpeciesScheme] = {}
        for sc in schemes:
            key = (sc.species_name, sc.host)
            if key in self._schemes:
                raise ValidationError(f"duplicate species entry {key}")
            self._schemes[key] = sc

    def __len__(self) -> int:
        return len(self._schemes)

    def __iter__(self):
        return iter(self._schemes.values())

    def names(self) -> list[tuple[str, str]]:
        return sorted(self._schemes.keys())

    def get(self, species_name: str, host: str | None = None) -> SpeciesScheme:
        if host is not None:
            try:
                return self._schemes[(species_name, host)]
            except KeyError:
                raise RegistryLookupError(f"no species {species_name!r} in host {host!r}") from None
        matches = [sc for (n, _), sc in self._schemes.items() if n == species_name]
        if not matches:
            raise RegistryLookupError(f"unknown species {species_name!r}")
        if len(matches) > 1:
            hosts = [sc.host for sc in matches]
            raise RegistryLookupError(
                f"species {species_name!r} present in several hosts {hosts}; pass host=")
        return matches[0]


def _parse_level(rec: dict, where: str) -> EnergyLevel:
    try:
        role = LevelRole(rec.get("role", "unassigned"))
    except ValueError:
        raise ParseError(f"{where}: unknown role {rec.get('role')!r}") from None
    try:
        return EnergyLevel(
            term_symbol=rec["term"],
            energy=float(rec["energy_cm"]),
            lifetime=rec.get("lifetime_s"),
            lifetime_host=rec.get("lifetime_host"),
            u2_diag_sq=rec.get("u2_diag_sq"),
            role=role,
            note=rec.get("note"),
        )
    except KeyError as exc:
        raise ParseError(f"{where}: missing required field {exc}") from None


def _parse_transition(rec: dict, where: str) -> TransitionDatum:
    try:
        uk_sq = {int(k): float(v) for k, v in rec.get("uk_sq", {}).items()}
        return TransitionDatum(
            from_level=rec["from"],
            to_level=rec["to"],
            uk_sq=uk_sq,
            radiative_rate=rec.get("radiative_rate_s"),
        )
    except KeyError as exc:
        raise ParseError(f"{where}: missing required field {exc}") from None


def _parse_document(doc: dict, origin: str) -> list[SpeciesScheme]:
    if not isinstance(doc, dict) or "species" not in doc:
        raise ParseError(f"{origin}: expected a top-level object with a 'species' list")
    schema = doc.get("schema", SCHEMA_NAME)
    if schema != SCHEMA_NAME:
        raise ParseError(f"{origin}: unsupported schema {schema!r}")
    schemes = []
    for i, rec in enumerate(doc["species"]):
        where = f"{origin}: species[{i}]"
        try:
            name, host = rec["name"], rec["host"]
        except KeyError as exc:
            raise ParseError(f"{where}: missing required field {exc}") from None
        levels = tuple(_parse_level(lv, f"{where}.levels[{j}]")
                       for j, lv in enumerate(rec.get("levels", [])))
        transitions = tuple(_parse_transition(tr, f"{where}.transitions[{j}]")
                            for j, tr in enumerate(rec.get("transitions", [])))
        schemes.append(SpeciesScheme(name, host, levels, transitions))
    return schemes


def builtin_schemes() -> list[SpeciesScheme]:
    text = resources.files("oqcsim.data").joinpath("species_builtin.json").read_text()
    return _parse_document(json.loads(text), "builtin")


def load_registry(source=None) -> SpeciesRegistry:
    """Build a registry from the built-in data plus an optional user source.

    Parameters
    ----------
    source : None, str, Path, file-like, or dict
        Extra species data in the documented JSON schema.  ``None`` (or
        an empty document) yields the built-ins only.  Duplicates of a
        built-in (same name and host) are rejected.
    """
    schemes = builtin_schemes()
    if source is not None:
        if isinstance(source, dict):
            doc, origin = source, "<dict>"
        else:
            if isinstance(source, (str, Path)):
                text, origin = Path(source).read_text(), str(source)
            elif isinstance(source, io.IOBase) or hasattr(source, "read"):
                text, origin = source.read(), "<stream>"
            else:
                raise ParseError(f"unsupported species source {type(source).__name__}")
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{origin}: line {exc.lineno}: {exc.msg}") from None
        schemes.extend(_parse_document(doc, origin))
    return SpeciesRegistry(schemes)
