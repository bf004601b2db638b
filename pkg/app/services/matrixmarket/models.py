"""Schemas for Matrix Market headers and matrix sources."""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from app.core.enums import MMField, MMFormat, MMSymmetry, SourceScheme


class MatrixMarketHeader(BaseModel):
    """Parsed `%%MatrixMarket` banner."""

    object: str = Field("matrix", pattern="^matrix$")
    format: MMFormat = MMFormat.COORDINATE
    field: MMField = MMField.REAL
    symmetry: MMSymmetry = MMSymmetry.GENERAL

    @model_validator(mode="after")
    def _pattern_needs_coordinates(self) -> MatrixMarketHeader:
        if self.format is MMFormat.ARRAY and self.field is MMField.PATTERN:
            raise ValueError("pattern field requires coordinate format")
        return self

    def banner(self) -> str:
        return (
            f"%%MatrixMarket {self.object} {self.format.value} "
            f"{self.field.value} {self.symmetry.value}"
        )


class MatrixSource(BaseModel):
    """A resolved `gauss:D`, `uniform:D` or `mm:PATH` source string."""

    scheme: SourceScheme
    dim: int | None = Field(None, ge=1, description="Dimension of a generated matrix.")
    path: Path | None = Field(None, description="Matrix Market file location.")

    @property
    def label(self) -> str:
        """Identifier written to the `matrix` column of experiment results."""
        if self.scheme is SourceScheme.MM and self.path is not None:
            return self.path.stem
        return f"{self.scheme.value}:{self.dim}"
