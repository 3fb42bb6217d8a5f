from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field


# ============================================================================
# 通用请求/响应模型
# ============================================================================


class WordRequest(BaseModel):
    """单个辫字"""

    word: str = Field(default="", description="辫字，例如 's1 s2^-1'，空串为单位元")
    n: Optional[int] = Field(default=None, ge=1, description="弦数（缺省取 1 + 最大下标）")


class PairRequest(BaseModel):
    """一对辫字"""

    left: str = Field(default="", description="左侧辫字")
    right: str = Field(default="", description="右侧辫字")
    n: Optional[int] = Field(default=None, ge=1, description="弦数")


class BaseResponse(BaseModel):
    """统一响应结构"""

    type: str = Field(..., description="计算类型")
    details: dict = Field(..., description="计算结果")


# ============================================================================
# 字问题 / 序
# ============================================================================


class NormalFormRequest(WordRequest):
    """Garside 正规形请求"""

    pass


class EqualRequest(PairRequest):
    """相等判定请求"""

    pass


class CompareRequest(PairRequest):
    """比较请求"""

    order: Literal["dehornoy", "partial"] = Field(
        default="dehornoy", description="dehornoy 左序或基于指数和的部分双序"
    )


# ============================================================================
# 中间子群
# ============================================================================


class SubgroupMemberRequest(BaseModel):
    """H_β 成员判定请求"""

    beta: str = Field(..., description="生成元 β")
    word: str = Field(default="", description="待判定的辫字")
    n: Optional[int] = Field(default=None, ge=1, description="弦数")


class CanonicalRequest(BaseModel):
    """典型代表元请求"""

    cycle_type: List[int] = Field(..., description="轮换类型，例如 [3, 2]")
    n: int = Field(..., ge=2, description="弦数")


# ============================================================================
# 证书
# ============================================================================


class WitnessRequest(BaseModel):
    """非双序证书请求"""

    beta: str = Field(..., description="非纯辫 β")
    n: Optional[int] = Field(default=None, ge=1, description="弦数")
    infinite: bool = Field(default=False, description="将 β 视为 B_∞ 中的元素")


class WitnessVerifyRequest(BaseModel):
    """证书重新验证请求（witness 返回的 JSON）"""

    certificate: Dict[str, Any] = Field(..., description="证书 JSON")


class CheckItem(BaseModel):
    """单项检查结果"""

    name: str
    passed: bool
    detail: str
