"""
辫群计算 API 服务

提供字问题、Dehornoy 序、中间子群与非双序证书的 RESTful API
"""

import time
from datetime import datetime

from fastapi import FastAPI, HTTPException, Query

from src.analysis.braid_core import CycleType, permutation_of
from src.analysis.intermediate_subgroups import (
    canonical_representative,
    member,
    subgroup_of,
)
from src.analysis.order_engine import dehornoy_compare, partial_compare
from src.analysis.torsion_witness import (
    build_certificate,
    build_certificate_infinite,
    certificate_from_dict,
    verify_certificate,
)
from src.analysis.word_problem import (
    equal,
    normal_form,
    run_identity_suite,
    run_noncommutation_suite,
)
from src.server.models import (
    BaseResponse,
    CanonicalRequest,
    CheckItem,
    CompareRequest,
    EqualRequest,
    NormalFormRequest,
    SubgroupMemberRequest,
    WitnessRequest,
    WitnessVerifyRequest,
)
from src.utils.word_syntax import format_word, parse_infinite_word, parse_word

app = FastAPI(
    title="辫群计算API",
    description="提供字问题、Dehornoy 序、中间子群与非双序证书",
    version="1.0.0",
)


def _bad_request(e: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(e))


# ============================================================================
# 字问题 API
# ============================================================================


@app.post("/api/normal-form", response_model=BaseResponse)
async def normal_form_api(request: NormalFormRequest):
    """
    Garside 左贪婪正规形

    返回文本格式 `D^<p> | <因子> | ...` 以及置换与指数和。
    """
    try:
        word = parse_word(request.word, request.n)
        nf = normal_form(word)
        return BaseResponse(
            type="normal_form",
            details={
                "n": word.n,
                "normal_form": nf.format(),
                "delta_power": nf.delta_power,
                "factors": [list(f.images) for f in nf.factors],
                "permutation": list(permutation_of(word).images),
            },
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/equal", response_model=BaseResponse)
async def equal_api(request: EqualRequest):
    try:
        verdict = equal(parse_word(request.left, request.n), parse_word(request.right, request.n))
        return BaseResponse(
            type="equal",
            details={
                "equal": verdict.equal,
                "left": verdict.left_normal_form.format(),
                "right": verdict.right_normal_form.format(),
            },
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/compare", response_model=BaseResponse)
async def compare_api(request: CompareRequest):
    """Dehornoy 左序（全序）或指数和部分双序"""
    try:
        u, v = parse_word(request.left, request.n), parse_word(request.right, request.n)
        verdict = dehornoy_compare(u, v) if request.order == "dehornoy" else partial_compare(u, v)
        return BaseResponse(type="compare", details={"order": request.order, "verdict": verdict.value})
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


# ============================================================================
# 中间子群 API
# ============================================================================


@app.post("/api/subgroup/member", response_model=BaseResponse)
async def subgroup_member_api(request: SubgroupMemberRequest):
    try:
        beta = parse_word(request.beta, request.n)
        h = subgroup_of(beta)
        return BaseResponse(
            type="subgroup_member",
            details={
                "member": member(h, parse_word(request.word, beta.n)),
                "subgroup": h.to_dict(),
            },
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/subgroup/canonical", response_model=BaseResponse)
async def subgroup_canonical_api(request: CanonicalRequest):
    try:
        word = canonical_representative(CycleType(tuple(request.cycle_type), request.n), request.n)
        return BaseResponse(
            type="subgroup_canonical",
            details={"n": request.n, "cycle_type": request.cycle_type, "word": format_word(word)},
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


# ============================================================================
# 证书 API
# ============================================================================


@app.post("/api/witness", response_model=BaseResponse)
async def witness_api(request: WitnessRequest):
    """
    构造并验证 H_β 的非双序证书

    details.certificate 即 witness --json 的输出，可交给 /api/witness/verify 复验。
    """
    start_time = time.time()
    try:
        if request.infinite:
            cert = build_certificate_infinite(parse_infinite_word(request.beta))
        else:
            cert = build_certificate(parse_word(request.beta, request.n))
        report = verify_certificate(cert)
        return BaseResponse(
            type="witness",
            details={
                "certificate": cert.to_dict(verified=report.all_passed),
                "checks": [CheckItem(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
                "metadata": {
                    "timestamp": datetime.now().isoformat(),
                    "execution_time": round(time.time() - start_time, 2),
                },
            },
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/witness/verify", response_model=BaseResponse)
async def witness_verify_api(request: WitnessVerifyRequest):
    try:
        cert = certificate_from_dict(request.certificate)
    except (KeyError, ValueError) as e:
        raise _bad_request(e)
    report = verify_certificate(cert)
    return BaseResponse(
        type="witness_verify",
        details={
            "verified": report.all_passed,
            "checks": [CheckItem(name=c.name, passed=c.passed, detail=c.detail) for c in report.checks],
        },
    )


@app.get("/api/identities", response_model=BaseResponse)
async def identities_api(
    n_max: int = Query(default=5, ge=3, le=7, description="最大弦数"),
    noncommutation: bool = Query(default=True, description="是否包含不交换性套件"),
):
    """恒等式验证套件"""
    try:
        report = run_identity_suite(n_max)
        if noncommutation:
            report.entries.extend(run_noncommutation_suite(min(n_max, 6)).entries)
        return BaseResponse(
            type="identities",
            details={
                "all_passed": report.all_passed,
                "total": len(report.entries),
                "summary": {k: {"passed": ok, "total": t} for k, (ok, t) in report.summary().items()},
                "failures": [f.__dict__ for f in report.failures()],
            },
        )
    except ValueError as e:
        raise _bad_request(e)
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/")
async def root():
    """API 根路径"""
    return {
        "name": "辫群计算API",
        "version": "1.0.0",
        "endpoints": {
            "normal_form": "POST /api/normal-form",
            "equal": "POST /api/equal",
            "compare": "POST /api/compare",
            "subgroup_member": "POST /api/subgroup/member",
            "subgroup_canonical": "POST /api/subgroup/canonical",
            "witness": "POST /api/witness",
            "witness_verify": "POST /api/witness/verify",
            "identities": "GET /api/identities",
        },
    }


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
