"""Service layer: typed requests and responses over the library.

Every operation is a plain handler function taking a pydantic request
and returning a pydantic response; the FastAPI app routes to these
handlers one to one, and the command line client calls them directly in
process.  Elements travel as expression strings on the way in (the
grammar of :mod:`cofinj.expr`) and as interchange documents
``{"front": [[x, y], ...], "tail_start": n, "shift": k}`` on the way out.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import algebra, congruence, topology, witnesses
from .core import Element, Flavor
from .errors import AlgebraError, ParseError, UnsupportedFlavor
from .expr import parse_element, render

FlavorName = Literal["cn", "iso", "iso1", "mon", "almon"]


class ElementModel(BaseModel):
    front: list[tuple[int, int]] = Field(default_factory=list)
    tail_start: int = 1
    shift: int = 0

    @classmethod
    def from_element(cls, e: Element) -> "ElementModel":
        return cls(front=list(e.front), tail_start=e.tail_start, shift=e.shift)

    def to_element(self) -> Element:
        return Element(tuple(self.front), self.tail_start, self.shift)


class EvalRequest(BaseModel):
    expr: str


class ElementResponse(BaseModel):
    element: ElementModel
    compact: str


class MemberRequest(BaseModel):
    expr: str
    flavor: FlavorName = "almon"


class MemberResponse(BaseModel):
    member: bool


class PairRequest(BaseModel):
    x: str
    y: str
    flavor: FlavorName = "almon"


class GreenResponse(BaseModel):
    r_related: bool
    l_related: bool
    h_related: bool
    d_related: Optional[bool]


class ShiftResponse(BaseModel):
    shift: int


class RelatedResponse(BaseModel):
    related: bool


class CongruenceClassModel(BaseModel):
    kind: Literal["identity", "group"]
    modulus: Optional[int] = None

    def to_congruence(self) -> congruence.CongruenceClass:
        if self.kind == "identity":
            return congruence.CongruenceClass.identity()
        if self.modulus is None:
            raise AlgebraError("group congruence needs a modulus")
        return congruence.CongruenceClass.group(self.modulus)


class ClassifyRequest(BaseModel):
    pairs: list[tuple[str, str]]
    flavor: FlavorName = "almon"


class CongruenceRelatedRequest(BaseModel):
    congruence: CongruenceClassModel
    x: str
    y: str


class ReduceRequest(BaseModel):
    first: str
    second: str
    flavor: FlavorName = "almon"


class ReductionResponse(BaseModel):
    conjugator: ElementModel
    input: list[ElementModel]
    output: list[ElementModel]


class SimpleWitnessRequest(BaseModel):
    expr: str
    flavor: FlavorName = "almon"


class SimplicityResponse(BaseModel):
    left: ElementModel
    right: ElementModel


class SolveRequest(BaseModel):
    side: Literal["left", "right"]
    a: str
    b: str
    flavor: FlavorName = "almon"


class SolutionSetResponse(BaseModel):
    solutions: list[ElementModel]
    base: Optional[ElementModel]
    extension_count: int


class HClassRequest(BaseModel):
    dom_missing: list[int] = Field(default_factory=list)
    ran_missing: list[int] = Field(default_factory=list)
    tail_bound: int
    flavor: FlavorName = "almon"


class HClassResponse(BaseModel):
    members: list[ElementModel]
    count: int


class NbhdContainsRequest(BaseModel):
    center: str
    anchors: list[int] = Field(default_factory=list)
    candidate: str


class ContainsResponse(BaseModel):
    contains: bool


class NbhdCheckRequest(BaseModel):
    a: str
    b: str
    anchors: list[int]
    samples: int = 200
    seed: int = 0


class ViolationModel(BaseModel):
    pair: tuple[ElementModel, ElementModel]
    product: ElementModel


class ReportResponse(BaseModel):
    samples: int
    violations: list[ViolationModel]


class FactorizeCheckRequest(BaseModel):
    x: str
    y: str
    g: str


class HoldsResponse(BaseModel):
    holds: bool


def handle_eval(req: EvalRequest) -> ElementResponse:
    e = parse_element(req.expr)
    return ElementResponse(element=ElementModel.from_element(e), compact=render(e))


def handle_member(req: MemberRequest) -> MemberResponse:
    e = parse_element(req.expr)
    return MemberResponse(member=algebra.member(Flavor(req.flavor), e))


def handle_green(req: PairRequest) -> GreenResponse:
    report = algebra.green(
        Flavor(req.flavor), parse_element(req.x), parse_element(req.y)
    )
    return GreenResponse(
        r_related=report.r_related,
        l_related=report.l_related,
        h_related=report.h_related,
        d_related=report.d_related,
    )


def handle_shift(req: EvalRequest) -> ShiftResponse:
    return ShiftResponse(shift=congruence.shift_index(parse_element(req.expr)))


def handle_cmg_related(req: PairRequest) -> RelatedResponse:
    return RelatedResponse(
        related=congruence.min_group_related(
            parse_element(req.x), parse_element(req.y)
        )
    )


def handle_cmg_witness(req: PairRequest) -> ElementResponse:
    e = congruence.min_group_witness(parse_element(req.x), parse_element(req.y))
    return ElementResponse(element=ElementModel.from_element(e), compact=render(e))


def handle_classify(req: ClassifyRequest) -> CongruenceClassModel:
    pairs = [(parse_element(x), parse_element(y)) for x, y in req.pairs]
    cls = congruence.classify_congruence(Flavor(req.flavor), pairs)
    return CongruenceClassModel(kind=cls.kind, modulus=cls.modulus)


def handle_congruence_related(req: CongruenceRelatedRequest) -> RelatedResponse:
    return RelatedResponse(
        related=congruence.related_under(
            req.congruence.to_congruence(),
            parse_element(req.x),
            parse_element(req.y),
        )
    )


def handle_reduce(req: ReduceRequest) -> ReductionResponse:
    cert = congruence.reduce_idempotent_pair(
        Flavor(req.flavor), parse_element(req.first), parse_element(req.second)
    )
    return ReductionResponse(
        conjugator=ElementModel.from_element(cert.conjugator),
        input=[ElementModel.from_element(e) for e in cert.input_pair],
        output=[ElementModel.from_element(e) for e in cert.output_pair],
    )


def handle_simple_witness(req: SimpleWitnessRequest) -> SimplicityResponse:
    g, d = witnesses.simplicity_witness(Flavor(req.flavor), parse_element(req.expr))
    return SimplicityResponse(
        left=ElementModel.from_element(g), right=ElementModel.from_element(d)
    )


def handle_solve(req: SolveRequest) -> SolutionSetResponse:
    solver = witnesses.solve_left if req.side == "left" else witnesses.solve_right
    result = solver(Flavor(req.flavor), parse_element(req.a), parse_element(req.b))
    return SolutionSetResponse(
        solutions=[ElementModel.from_element(s) for s in result.solutions],
        base=(
            ElementModel.from_element(result.base)
            if result.base is not None
            else None
        ),
        extension_count=result.extension_count,
    )


def handle_hclass(req: HClassRequest) -> HClassResponse:
    members = witnesses.h_class_members(
        Flavor(req.flavor), req.dom_missing, req.ran_missing, req.tail_bound
    )
    return HClassResponse(
        members=[ElementModel.from_element(e) for e in members],
        count=len(members),
    )


def handle_nbhd_contains(req: NbhdContainsRequest) -> ContainsResponse:
    u = topology.BasicNbhd(parse_element(req.center), frozenset(req.anchors))
    return ContainsResponse(
        contains=topology.nbhd_contains(u, parse_element(req.candidate))
    )


def handle_nbhd_check(req: NbhdCheckRequest) -> ReportResponse:
    report = topology.check_product_containment(
        parse_element(req.a),
        parse_element(req.b),
        frozenset(req.anchors),
        req.samples,
        req.seed,
    )
    return ReportResponse(
        samples=report.samples,
        violations=[
            ViolationModel(
                pair=(
                    ElementModel.from_element(pair[0]),
                    ElementModel.from_element(pair[1]),
                ),
                product=ElementModel.from_element(prod),
            )
            for pair, prod in report.violations
        ],
    )


def handle_factorize_check(req: FactorizeCheckRequest) -> HoldsResponse:
    return HoldsResponse(
        holds=witnesses.is_factorization(
            parse_element(req.x), parse_element(req.y), parse_element(req.g)
        )
    )


app = FastAPI(
    title="cofinj",
    description="Exact arithmetic for cofinite eventually-shift partial "
    "injections of the positive integers",
)


@app.exception_handler(AlgebraError)
async def algebra_error_handler(request: Request, exc: AlgebraError):
    if isinstance(exc, ParseError):
        return JSONResponse(
            status_code=400,
            content={"error": "parse", "offset": exc.offset, "detail": str(exc)},
        )
    if isinstance(exc, UnsupportedFlavor):
        return JSONResponse(
            status_code=422,
            content={"error": "unsupported-flavor", "detail": str(exc)},
        )
    return JSONResponse(
        status_code=422,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/health")
async def health() -> dict:
    return {"status": "ok"}


@app.post("/eval", response_model=ElementResponse)
async def eval_route(req: EvalRequest) -> ElementResponse:
    return handle_eval(req)


@app.post("/member", response_model=MemberResponse)
async def member_route(req: MemberRequest) -> MemberResponse:
    return handle_member(req)


@app.post("/green", response_model=GreenResponse)
async def green_route(req: PairRequest) -> GreenResponse:
    return handle_green(req)


@app.post("/shift", response_model=ShiftResponse)
async def shift_route(req: EvalRequest) -> ShiftResponse:
    return handle_shift(req)


@app.post("/cmg/related", response_model=RelatedResponse)
async def cmg_related_route(req: PairRequest) -> RelatedResponse:
    return handle_cmg_related(req)


@app.post("/cmg/witness", response_model=ElementResponse)
async def cmg_witness_route(req: PairRequest) -> ElementResponse:
    return handle_cmg_witness(req)


@app.post(
    "/congruence/classify",
    response_model=CongruenceClassModel,
    response_model_exclude_none=True,
)
async def classify_route(req: ClassifyRequest) -> CongruenceClassModel:
    return handle_classify(req)


@app.post("/congruence/related", response_model=RelatedResponse)
async def congruence_related_route(req: CongruenceRelatedRequest) -> RelatedResponse:
    return handle_congruence_related(req)


@app.post("/reduce", response_model=ReductionResponse)
async def reduce_route(req: ReduceRequest) -> ReductionResponse:
    return handle_reduce(req)


@app.post("/simple-witness", response_model=SimplicityResponse)
async def simple_witness_route(req: SimpleWitnessRequest) -> SimplicityResponse:
    return handle_simple_witness(req)


@app.post("/solve", response_model=SolutionSetResponse)
async def solve_route(req: SolveRequest) -> SolutionSetResponse:
    return handle_solve(req)


@app.post("/hclass", response_model=HClassResponse)
async def hclass_route(req: HClassRequest) -> HClassResponse:
    return handle_hclass(req)


@app.post("/nbhd/contains", response_model=ContainsResponse)
async def nbhd_contains_route(req: NbhdContainsRequest) -> ContainsResponse:
    return handle_nbhd_contains(req)


@app.post("/nbhd/check", response_model=ReportResponse)
async def nbhd_check_route(req: NbhdCheckRequest) -> ReportResponse:
    return handle_nbhd_check(req)


@app.post("/factorize-check", response_model=HoldsResponse)
async def factorize_check_route(req: FactorizeCheckRequest) -> HoldsResponse:
    return handle_factorize_check(req)
