from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from clifford_engine.algebra.blades import default_labels
from clifford_engine.domain import EngineKind, PresetName, UnknownPresetError
from clifford_engine.engine.dispatch import GeometricAlgebra
from clifford_engine.forms.quadratic import QuadraticForm, Signature, signature_form
from clifford_engine.models.complex import complex_Q
from clifford_engine.models.conformal import cga_Q
from clifford_engine.models.quaternion import quaternion_Q


@dataclass(frozen=True, slots=True)
class PresetDefinition:
    """Declarative metadata for a named model algebra."""

    name: PresetName
    form_factory: Callable[[], QuadraticForm]
    labels: tuple[str, ...]
    description: str
    conformal_dim: int | None = None

    def form(self) -> QuadraticForm:
        return self.form_factory()

    def build_algebra(self, engine: EngineKind = EngineKind.AUTO) -> GeometricAlgebra:
        return GeometricAlgebra(
            form=self.form(),
            engine=engine,
            labels=self.labels,
            name=self.name.value,
            conformal_dim=self.conformal_dim,
        )


def _conformal_labels(dim: int) -> tuple[str, ...]:
    return default_labels(dim) + ("n0", "ni")


_PRESET_DEFINITIONS: dict[PresetName, PresetDefinition] = {
    PresetName.COMPLEX: PresetDefinition(
        name=PresetName.COMPLEX,
        form_factory=complex_Q,
        labels=default_labels(1),
        description="G(0,1,0), isomorphic to the complex numbers with e1 as i.",
    ),
    PresetName.QUATERNION: PresetDefinition(
        name=PresetName.QUATERNION,
        form_factory=quaternion_Q,
        labels=default_labels(2),
        description="G(0,2,0), isomorphic to the quaternions via e1, e2, e1e2 as i, j, k.",
    ),
    PresetName.CGA2: PresetDefinition(
        name=PresetName.CGA2,
        form_factory=lambda: cga_Q(2),
        labels=_conformal_labels(2),
        description="Conformal model of the plane with null basis vectors n0 and ni.",
        conformal_dim=2,
    ),
    PresetName.CGA3: PresetDefinition(
        name=PresetName.CGA3,
        form_factory=lambda: cga_Q(3),
        labels=_conformal_labels(3),
        description="Conformal model of space; signature-equivalent to G(4,1,0).",
        conformal_dim=3,
    ),
    PresetName.PGA3: PresetDefinition(
        name=PresetName.PGA3,
        form_factory=lambda: signature_form(Signature(3, 0, 1)),
        labels=default_labels(4),
        description="Plane-based geometric algebra G(3,0,1).",
    ),
    PresetName.EUCLID2: PresetDefinition(
        name=PresetName.EUCLID2,
        form_factory=lambda: signature_form(Signature(2, 0, 0)),
        labels=default_labels(2),
        description="Euclidean plane G(2,0,0).",
    ),
    PresetName.EUCLID3: PresetDefinition(
        name=PresetName.EUCLID3,
        form_factory=lambda: signature_form(Signature(3, 0, 0)),
        labels=default_labels(3),
        description="Euclidean space G(3,0,0).",
    ),
}


def get_preset(name: str | PresetName) -> PresetDefinition:
    """Fetches the preset definition, listing valid names on failure."""

    try:
        key = PresetName(name)
    except ValueError as exc:
        raise UnknownPresetError(str(name)) from exc
    return _PRESET_DEFINITIONS[key]


def preset(name: str | PresetName) -> tuple[QuadraticForm, tuple[str, ...]]:
    definition = get_preset(name)
    return definition.form(), definition.labels


ALL_PRESETS: list[PresetDefinition] = list(_PRESET_DEFINITIONS.values())
