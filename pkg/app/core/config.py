from typing import List
from pydantic import BaseModel
import os

from dotenv import load_dotenv
from pathlib import Path
import logging

logging.basicConfig(level=logging.INFO)

load_dotenv()
ROOT_DIR = Path(__file__).resolve().parent.parent.parent
DATA_DIR = ROOT_DIR / "data"

class BaseSetting(BaseModel):
    PROJECT_NAME: str = "hyperbolic-debias"
    API_V1_STR: str = "/api/v1"
    REPORT_SCHEMA_VERSION: int = 1

class GeometrySetting(BaseModel):
    # 곡률은 c = 1 로 고정
    BALL_EPS: float = 1e-5
    ZERO_EPS: float = 1e-12
    COMPENSATED_SUM_MIN_DIM: int = 64

class OptimizerSetting(BaseModel):
    BETA1: float = 0.9
    BETA2: float = 0.999
    ADAM_EPS: float = 1e-8
    LEARNING_RATE: float = 3e-4
    FINITE_DIFFERENCE_STEP: float = 1e-6

class MeanSetting(BaseModel):
    LEARNING_RATE: float = float(os.getenv("MEAN_LEARNING_RATE", "3e-4"))
    MAX_EPOCHS: int = int(os.getenv("MEAN_MAX_EPOCHS", "2000"))
    TOL: float = 1e-8

class PgdSetting(BaseModel):
    LAMBDA1: float = 0.5
    LAMBDA2: float = 0.5
    LEARNING_RATE: float = float(os.getenv("PGD_LEARNING_RATE", "5e-3"))
    EPOCHS: int = int(os.getenv("PGD_EPOCHS", "350"))
    BIAS_THRESHOLD: float = 0.1

class EvaluationSetting(BaseModel):
    WEAT_MAX_PERMUTATIONS: int = 200_000
    WEAT_SEED: int = int(os.getenv("WEAT_SEED", "42"))
    # 교차검증 결과 추정값
    DEFAULT_T: float = 0.3
    T_GRID: List[float] = [round(0.1 * i, 1) for i in range(11)]
    CV_FOLDS: int = 2

class DataSetting(BaseModel):
    MALE_WORDS_PATH: str = os.getenv("MALE_WORDS_PATH", str(DATA_DIR / "male_definitional.txt"))
    FEMALE_WORDS_PATH: str = os.getenv("FEMALE_WORDS_PATH", str(DATA_DIR / "female_definitional.txt"))
    DEFINITIONAL_PAIRS_PATH: str = str(DATA_DIR / "definitional_pairs.txt")
    GENDER_SPECIFIC_PATH: str = os.getenv("GENDER_SPECIFIC_PATH", str(DATA_DIR / "gender_specific.txt"))
    PROFESSIONS_PATH: str = str(DATA_DIR / "professions.txt")
    WEAT_SPEC_DIR: str = str(DATA_DIR / "weat")

    BINARY_MAGIC: bytes = b"HDEB"
    TEXT_FLOAT_FORMAT: str = "%.17g"

class ApiSetting(BaseModel):
    EMBEDDINGS_PATH: str = os.getenv("EMBEDDINGS_PATH", "")
    EMBEDDINGS_SPACE: str = os.getenv("EMBEDDINGS_SPACE", "poincare")
    MAX_TOP_K: int = 50
    MAX_CONCURRENT_OPTIMIZATIONS: int = int(os.getenv("MAX_CONCURRENT_OPTIMIZATIONS", "4"))
    OPTIMIZATION_PATHS: List[str] = ["/api/v1/debias"]


base_settings = BaseSetting()
geometry_setting = GeometrySetting()
optimizer_setting = OptimizerSetting()
mean_setting = MeanSetting()
pgd_setting = PgdSetting()
evaluation_setting = EvaluationSetting()
data_setting = DataSetting()
api_setting = ApiSetting()
