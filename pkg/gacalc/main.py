# gacalc/main.py

import math
from typing import List

from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

load_dotenv()

from . import models
from .clifford_core import CliffordAlgebra
from .errors import GacalcError
from .parser import evaluate_source
from .pga3d import dihedral_angle, parallel_through
from .playfair import decompose
from .scalars import ScalarMode
from .structure import bivector_lie_table, commutator, inverse, unit_decompose
from .utils import complement_for, parse_plane, parse_point
from .verification import SUITES, run_suites, suggest_suite

app = FastAPI(title="gacalc", version="1.0.0")

# --- Middleware ---
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _algebra(request: models.AlgebraRequest) -> CliffordAlgebra:
    try:
        return CliffordAlgebra.of(request.build_form())
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.get("/api/health")
def health():
    return {"status": "ok", "suites": len(SUITES)}


# --- Expression endpoints ---
@app.post("/api/eval", response_model=models.MultivectorPayload)
def eval_expression(request: models.ExpressionRequest):
    alg = _algebra(request)
    try:
        return models.MultivectorPayload.of(evaluate_source(request.expr, alg))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/api/inv", response_model=models.MultivectorPayload)
def invert(request: models.ExpressionRequest):
    alg = _algebra(request)
    try:
        return models.MultivectorPayload.of(inverse(evaluate_source(request.expr, alg)))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.post("/api/cmt", response_model=models.MultivectorPayload)
def bracket(request: models.CommutatorRequest):
    alg = _algebra(request)
    try:
        return models.MultivectorPayload.of(
            commutator(evaluate_source(request.b, alg), evaluate_source(request.x, alg)))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))


# --- Playfair endpoints ---
@app.post("/api/decompose", response_model=models.DecompositionPayload)
def playfair_decompose(request: models.DecomposeRequest):
    alg = _algebra(request)
    try:
        comp = complement_for(alg.form, request.point)
        split = decompose(evaluate_source(request.expr, alg), comp)
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return models.DecompositionPayload(
        at_point=models.MultivectorPayload.of(split.at_w),
        at_infinity=models.MultivectorPayload.of(split.at_infinity()),
        cofactor=models.MultivectorPayload.of(split.ideal_cofactor),
    )


@app.post("/api/units", response_model=models.UnitPayload)
def units(request: models.DecomposeRequest):
    alg = _algebra(request)
    try:
        u = unit_decompose(evaluate_source(request.expr, alg), complement_for(alg.form, request.point))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return models.UnitPayload(r=models.MultivectorPayload.of(u.r), tail=models.MultivectorPayload.of(u.tail))


@app.post("/api/lie-table", response_model=models.LieTablePayload)
def lie_table(request: models.AlgebraRequest):
    alg = _algebra(request)
    try:
        return models.LieTablePayload.of(bivector_lie_table(alg))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))


# --- PGA3 endpoints ---
@app.post("/api/parallel", response_model=models.PlanePayload)
def parallel(request: models.ParallelRequest):
    try:
        plane = parallel_through(parse_point(request.point, request.scalars),
                                 parse_plane(request.plane, request.scalars))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return models.PlanePayload.of(plane)


@app.post("/api/angle", response_model=models.AnglePayload)
def angle(request: models.AngleRequest):
    try:
        theta = dihedral_angle(parse_plane(request.plane1, ScalarMode.FLOAT),
                               parse_plane(request.plane2, ScalarMode.FLOAT))
    except GacalcError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return models.AnglePayload(radians=theta, degrees=math.degrees(theta))


# --- Verification ---
@app.post("/api/check", response_model=List[models.LemmaReport])
def check(request: models.CheckRequest):
    names = list(SUITES) if request.suite == "all" else [request.suite]
    for name in names:
        if name not in SUITES:
            guess = suggest_suite(name)
            hint = f"; did you mean {guess!r}?" if guess else ""
            raise HTTPException(status_code=404, detail=f"unknown suite {name!r}{hint}")
    return run_suites(names, seed=request.seed)
