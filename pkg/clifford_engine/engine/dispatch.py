from __future__ import annotations

import logging
from dataclasses import dataclass, field

from clifford_engine.algebra.blades import all_blades, default_labels
from clifford_engine.algebra.multivector import Multivector, iota
from clifford_engine.domain import (
    MAX_TABLE_DIMENSION,
    EngineKind,
    NonDiagonalFormError,
    TableTooLargeError,
)
from clifford_engine.engine.fast import (
    CayleyTable,
    build_cayley_table,
    diagonal_product,
    left_contraction,
    scalar_product,
    wedge_product,
)
from clifford_engine.engine.oracle import product_general
from clifford_engine.forms.quadratic import FieldVector, QuadraticForm

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class GeometricAlgebra:
    """One metric, its basis labels, and the engine that multiplies in it."""

    form: QuadraticForm
    engine: EngineKind = EngineKind.AUTO
    labels: tuple[str, ...] = ()
    name: str = ""
    conformal_dim: int | None = None
    cache_table: bool = False
    _table: CayleyTable | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.form.dim))
        if len(self.labels) != self.form.dim:
            raise ValueError(f"{len(self.labels)} labels for a {self.form.dim}-dimensional form")
        if not self.name:
            object.__setattr__(self, "name", f"metric({self.form.dim})")
        if self.engine == EngineKind.FAST and not self.form.is_diagonal():
            raise NonDiagonalFormError(f"fast engine requested for non-diagonal metric of {self.name}")
        if self.cache_table:
            self.blade_table()
        logger.debug(
            "algebra %s: engine=%s resolved to %s",
            self.name,
            self.engine.value,
            "fast" if self.uses_fast_path else "oracle",
        )

    @property
    def dim(self) -> int:
        return self.form.dim

    @property
    def uses_fast_path(self) -> bool:
        if self.engine == EngineKind.ORACLE:
            return False
        return self.form.is_diagonal()

    def with_engine(self, engine: EngineKind) -> GeometricAlgebra:
        return GeometricAlgebra(
            form=self.form,
            engine=engine,
            labels=self.labels,
            name=self.name,
            conformal_dim=self.conformal_dim,
            cache_table=self.cache_table,
        )

    def product(self, form: QuadraticForm, a: Multivector, b: Multivector) -> Multivector:
        """Engine-selected product with the `ProductFn` signature."""

        if self.uses_fast_path:
            return diagonal_product(form, a, b, table=self._table if form is self.form else None)
        return product_general(form, a, b)

    def mul(self, a: Multivector, b: Multivector) -> Multivector:
        return self.product(self.form, a, b)

    def wedge(self, a: Multivector, b: Multivector) -> Multivector:
        return wedge_product(a, b)

    def left_contraction(self, a: Multivector, b: Multivector) -> Multivector:
        return left_contraction(self.form, a, b, product=self.product)

    def scalar_product(self, a: Multivector, b: Multivector) -> Multivector:
        return scalar_product(self.form, a, b, product=self.product)

    def scalar(self, value: object) -> Multivector:
        return Multivector(self.dim, ((0, value),))

    def vector(self, *coords: object) -> Multivector:
        return iota(FieldVector(tuple(coords)))

    def basis_vector(self, axis: int) -> Multivector:
        return Multivector.blade(self.dim, 1 << axis)

    def blade_table(self) -> CayleyTable | None:
        """The frozen blade-product cache of the fast path, built once per context."""

        if not self.uses_fast_path:
            return None
        if self._table is None:
            object.__setattr__(self, "_table", build_cayley_table(self.form))
        return self._table

    def cayley_table(self) -> list[list[Multivector]]:
        """Blade-by-blade products in (grade, bit pattern) order; fills the blade cache first."""

        if self.dim > MAX_TABLE_DIMENSION:
            raise TableTooLargeError(
                f"cayley table for {self.dim} basis vectors is too large to print "
                f"(limit {MAX_TABLE_DIMENSION}); multiply blades through GeometricAlgebra.mul instead"
            )
        self.blade_table()
        blades = [Multivector.blade(self.dim, blade) for blade in all_blades(self.dim)]
        return [[self.mul(row, column) for column in blades] for row in blades]
