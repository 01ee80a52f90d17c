from enum import Enum

class OptimizerEnum(Enum):
    RADAM = "radam"
    RSGD = "rsgd"

class MomentumTransportEnum(Enum):
    PARALLEL = "parallel"
    LOG_EXP = "log_exp"

class GradientModeEnum(Enum):
    ANALYTIC = "analytic"
    FINITE_DIFFERENCE = "finite_difference"
