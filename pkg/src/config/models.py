"""
配置模型定义

用于定义各个计算场景的参数配置模型
"""

from pydantic import BaseModel, Field, ConfigDict

from src.settings import settings


class WordProblemConfig(BaseModel):
    """
    字问题判定（Garside 正规形 / 柄约化）的参数配置模型
    """

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "handle_step_budget": 1000000,
            }
        }
    )

    # 柄约化步数上限（柄约化必然终止，超出说明实现有误）
    handle_step_budget: int = Field(
        default=settings.engine_config["handle_step_budget"],
        ge=1,
        description="每个辫字的柄约化步数上限",
    )


class IdentitySuiteConfig(BaseModel):
    """
    恒等式验证套件的参数配置模型
    """

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "n_max": 7,
                "include_noncommutation": True,
            }
        }
    )

    n_max: int = Field(
        default=7,
        ge=3,
        le=9,
        description="参与验证的最大弦数",
    )

    include_noncommutation: bool = Field(
        default=True,
        description="是否同时运行不交换性套件（[A_{1,2}, Δ_i] ≠ 1 等）",
    )


class WitnessScanConfig(BaseModel):
    """
    广义挠元证书扫描的参数配置模型
    """

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "n": 5,
                "max_workers": 4,
                "verify": True,
                "show_progress": False,
            }
        }
    )

    n: int = Field(default=4, ge=3, le=6, description="弦数")

    max_workers: int = Field(
        default=settings.engine_config["scan_workers"],
        ge=1,
        description="并发任务数（结果按确定顺序汇总）",
    )

    verify: bool = Field(default=True, description="是否对每个证书进行独立验证")

    show_progress: bool = Field(default=False, description="是否显示 tqdm 进度条")


class SamplingConfig(BaseModel):
    """
    随机抽样检查的参数配置模型
    """

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "seed": 20240101,
                "max_length": 16,
                "samples": 1000,
                "relator_insertions": 3,
            }
        }
    )

    seed: int = Field(
        default=settings.engine_config["random_seed"],
        description="随机种子，保证可复现",
    )

    max_length: int = Field(default=16, ge=0, description="随机字的最大长度")

    samples: int = Field(default=1000, ge=1, description="样本数量")

    relator_insertions: int = Field(
        default=3, ge=0, description="每个样本插入的关系子个数"
    )
