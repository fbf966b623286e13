"""Request/response models for the filtering service.

Graphs and signals travel as the package's text formats (edge-list and
one-value-per-line), so files move through the API unchanged.
"""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class BankModel(BaseModel):
    name: str = "itersine"
    num_filters: int = Field(default=8, ge=1)
    num_scales: int = Field(default=1, ge=1)
    adapted: bool = False


class GenerateRequest(BaseModel):
    family: str  # "er" | "sensor"
    n: int = Field(ge=1)
    p: Optional[float] = None
    k: Optional[int] = None
    seed: int = 0


class GenerateResponse(BaseModel):
    edge_list: str
    n: int
    num_edges: int


class FilterRequest(BaseModel):
    graph: str  # edge-list text
    signal: str  # signal text
    bank: BankModel = BankModel()
    method: str = "exact"  # "exact" | "chebyshev" | "lanczos"
    order: int = Field(default=30, ge=1)
    eps: Optional[float] = None  # adaptive Lanczos tolerance
    j: int = Field(default=3, ge=1)
    oracle_cap: int = 2000


class FilterResponse(BaseModel):
    signals: List[str]  # one text signal per filter in the bank
    filters: List[str]  # one-line description per filter


class SpectrumRequest(BaseModel):
    graph: str
    bins: int = Field(default=50, ge=1)
    oracle_cap: int = 2000


class ErrorVsOrderRequest(BaseModel):
    family: str = "er"
    n: int = 500
    p: float = 0.04
    k: int = 6
    seeds: List[int] = [1]
    bank: BankModel = BankModel(adapted=True)
    M_min: int = 2
    M_max: int = 60
    step: int = 2
    num_signals: int = 10
    oracle_cap: int = 2000
    threads: int = 1


class ErrorVsEstimateRequest(BaseModel):
    family: str = "er"
    n: int = 500
    p: float = 0.04
    k: int = 6
    seeds: List[int] = [1]
    bank: BankModel = BankModel(adapted=True)
    j: int = 3
    M_min: int = 2
    M_max: int = 60
    step: int = 2
    num_signals: int = 1
    oracle_cap: int = 2000
    threads: int = 1


class ErrorVsPRequest(BaseModel):
    n: int = 1000
    p_list: List[float] = [0.02, 0.05, 0.1, 0.2, 0.3]
    M: int = 30
    bank: BankModel = BankModel(name="mexican-hat")
    seeds: List[int] = [1]
    num_signals: int = 10
    oracle_cap: int = 2000
    threads: int = 1


class CsvResponse(BaseModel):
    csv: str
