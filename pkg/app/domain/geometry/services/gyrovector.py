import math
from typing import Union

import numpy as np
import numpy.typing as npt

from app.core.config import geometry_setting
from app.core.errors.exceptions import InvalidPointException, DimensionMismatchException, ZeroGyrovectorException
from app.domain.geometry.schemas.gyrovector import PoincarePoint, RootedGyrovector, TangentVector

ArrayLike = Union[npt.ArrayLike, PoincarePoint]


def _dot(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """마지막 축 내적 (keepdims). 단일 벡터이고 n >= 64 이면 보정 합산을 쓴다."""
    if x.ndim == 1 and y.ndim == 1 and x.shape[-1] >= geometry_setting.COMPENSATED_SUM_MIN_DIM:
        return np.array([math.fsum(x * y)])
    # numpy 의 축 합산은 pairwise summation
    return np.sum(x * y, axis=-1, keepdims=True)


def _sqnorm(x: np.ndarray) -> np.ndarray:
    return _dot(x, x)


def _norm(x: np.ndarray) -> np.ndarray:
    return np.sqrt(_sqnorm(x))


def _as_vector(x: ArrayLike, name: str = "x") -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if not np.all(np.isfinite(arr)):
        raise InvalidPointException(f"{name} has non-finite coordinates")
    return arr


def as_point(x: ArrayLike, name: str = "x") -> PoincarePoint:
    """입력 검증: 유한하고 노름이 1 미만인 점만 허용"""
    arr = _as_vector(x, name)
    if np.any(_sqnorm(arr) >= 1.0):
        raise InvalidPointException(f"{name} has norm >= 1")
    return arr


def _check_dims(*arrays: np.ndarray) -> None:
    dims = {a.shape[-1] for a in arrays}
    if len(dims) > 1:
        raise DimensionMismatchException(f"dimensions {sorted(dims)}")


def project_to_ball(x: ArrayLike) -> PoincarePoint:
    """노름이 1 - ε_ball 을 넘는 점을 반지름 방향으로 1 - ε_ball 까지 당긴다."""
    arr = _as_vector(x)
    max_norm = 1.0 - geometry_setting.BALL_EPS
    norm = _norm(arr)
    if not np.any(norm > max_norm):
        return arr
    scale = np.where(norm > max_norm, max_norm / np.where(norm > 0, norm, 1.0), 1.0)
    return arr * scale


def conformal_factor(x: ArrayLike) -> Union[float, np.ndarray]:
    x = as_point(x)
    lam = 2.0 / (1.0 - _sqnorm(x))
    return float(lam[0]) if x.ndim == 1 else lam[..., 0]


# ---------------------------------------------------------------------------
# 내부 연산: 검증 없이 배열 그대로 처리 (브로드캐스팅 허용)
# ---------------------------------------------------------------------------

def _mobius_add(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    xy = _dot(x, y)
    x2 = _sqnorm(x)
    y2 = _sqnorm(y)
    num = (1.0 + 2.0 * xy + y2) * x + (1.0 - x2) * y
    denom = 1.0 + 2.0 * xy + x2 * y2
    return project_to_ball(num / np.maximum(denom, np.finfo(np.float64).tiny))


def _gyration(a: np.ndarray, b: np.ndarray, z: np.ndarray) -> np.ndarray:
    # 닫힌 형태. z 에 대해 선형이므로 접벡터에도 적용할 수 있다.
    a2 = _sqnorm(a)
    b2 = _sqnorm(b)
    ab = _dot(a, b)
    az = _dot(a, z)
    bz = _dot(b, z)
    coef_a = -az * b2 + bz + 2.0 * ab * bz
    coef_b = -bz * a2 - az
    denom = 1.0 + 2.0 * ab + a2 * b2
    return z + 2.0 * (coef_a * a + coef_b * b) / np.maximum(denom, np.finfo(np.float64).tiny)


def _scalar_mul(r: float, x: np.ndarray) -> np.ndarray:
    norm = _norm(x)
    safe = np.where(norm > 0.0, norm, 1.0)
    scaled = np.tanh(r * np.arctanh(np.minimum(norm, 1.0 - geometry_setting.BALL_EPS))) / safe * x
    return project_to_ball(np.where(norm > 0.0, scaled, 0.0))


def _lambda(x: np.ndarray) -> np.ndarray:
    return 2.0 / (1.0 - _sqnorm(x))


def _exp(x: np.ndarray, v: np.ndarray) -> np.ndarray:
    v_norm = _norm(v)
    if not np.any(v_norm > 0.0):
        return np.broadcast_to(x, np.broadcast_shapes(x.shape, v.shape)).copy()
    safe = np.where(v_norm > 0.0, v_norm, 1.0)
    second = np.tanh(_lambda(x) * v_norm / 2.0) / safe * v
    return _mobius_add(x, project_to_ball(np.where(v_norm > 0.0, second, 0.0)))


def _log(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    sub = _mobius_add(-x, y)
    sub_norm = _norm(sub)
    safe = np.where(sub_norm > 0.0, sub_norm, 1.0)
    res = 2.0 / _lambda(x) * np.arctanh(sub_norm) / safe * sub
    return np.where(sub_norm > 0.0, res, 0.0)


def _distance(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return 2.0 * np.arctanh(_norm(_mobius_add(-x, y)))[..., 0]


def _parallel_transport(x: np.ndarray, y: np.ndarray, v: np.ndarray) -> np.ndarray:
    """P_{x→y}(v) = (λ_x / λ_y) · gyr[y, ⊖x] v"""
    return _lambda(x) / _lambda(y) * _gyration(y, -x, v)


def _scalar(value: np.ndarray) -> Union[float, np.ndarray]:
    return float(value) if np.ndim(value) == 0 else value


# ---------------------------------------------------------------------------
# 공개 연산
# ---------------------------------------------------------------------------

def mobius_add(x: ArrayLike, y: ArrayLike) -> PoincarePoint:
    x, y = as_point(x, "x"), as_point(y, "y")
    _check_dims(x, y)
    return _mobius_add(x, y)


def mobius_neg(x: ArrayLike) -> PoincarePoint:
    return -as_point(x)


def mobius_sub(a: ArrayLike, z: ArrayLike) -> PoincarePoint:
    """a ⊖ z = a ⊕ (−z)"""
    a, z = as_point(a, "a"), as_point(z, "z")
    _check_dims(a, z)
    return _mobius_add(a, -z)


def gyr(a: ArrayLike, b: ArrayLike, z: ArrayLike) -> PoincarePoint:
    """gyr[a,b]z = ⊖(a ⊕ b) ⊕ {a ⊕ (b ⊕ z)}"""
    a, b, z = as_point(a, "a"), as_point(b, "b"), as_point(z, "z")
    _check_dims(a, b, z)
    return project_to_ball(_gyration(a, b, z))


def mobius_scalar_mul(r: float, x: ArrayLike) -> PoincarePoint:
    """r ⊗ x = tanh(r · atanh‖x‖) · x / ‖x‖,  r ⊗ 0 = 0"""
    x = as_point(x)
    if not math.isfinite(r):
        raise InvalidPointException("scalar is not finite")
    return _scalar_mul(float(r), x)


def poincare_distance(x: ArrayLike, y: ArrayLike) -> Union[float, np.ndarray]:
    """d(x, y) = 2 · atanh(‖⊖x ⊕ y‖). 배열 입력이면 행별 거리를 돌려준다."""
    x, y = as_point(x, "x"), as_point(y, "y")
    _check_dims(x, y)
    return _scalar(_distance(x, y))


def rooted_gyrovector(tail: ArrayLike, head: ArrayLike) -> RootedGyrovector:
    tail, head = as_point(tail, "tail"), as_point(head, "head")
    _check_dims(tail, head)
    return RootedGyrovector(tail=tail, head=head, value=_mobius_add(-tail, head))


def origin_gyrovector(head: ArrayLike) -> RootedGyrovector:
    """z' = O ⊕ z. value 는 head 좌표와 정확히 같다."""
    head = as_point(head, "head")
    return RootedGyrovector(tail=np.zeros_like(head), head=head, value=head.copy())


def negate_gyrovector(v: RootedGyrovector) -> RootedGyrovector:
    """같은 tail 에서 반대 방향(value = −v.value)을 가리키는 gyrovector"""
    return RootedGyrovector(tail=v.tail, head=_mobius_add(v.tail, -v.value), value=-v.value)


def _unit(value: np.ndarray, name: str) -> np.ndarray:
    norm = _norm(value)
    if np.any(norm <= geometry_setting.ZERO_EPS):
        raise ZeroGyrovectorException(f"{name} has norm <= {geometry_setting.ZERO_EPS}")
    return value / norm


def gyrocosine_values(u: np.ndarray, v: np.ndarray) -> Union[float, np.ndarray]:
    """gyrovector 값(⊖A ⊕ B)끼리의 gyrocosine. 단위화한 유클리드 내적을 [−1, 1] 로 자른다."""
    cos = _dot(_unit(u, "u"), _unit(v, "v"))[..., 0]
    return _scalar(np.clip(cos, -1.0, 1.0))


def gyrocosine(u: RootedGyrovector, v: RootedGyrovector) -> float:
    _check_dims(u.value, v.value)
    return gyrocosine_values(u.value, v.value)


def _tangent_components(x: np.ndarray, v: Union[TangentVector, ArrayLike]) -> np.ndarray:
    if isinstance(v, TangentVector):
        if v.base.shape != x.shape or not np.array_equal(v.base, x):
            raise InvalidPointException("tangent vector is attached to a different base point")
        components = _as_vector(v.components, "v")
    else:
        components = _as_vector(v, "v")
    _check_dims(x, components)
    return components


def exp_map(x: ArrayLike, v: Union[TangentVector, ArrayLike]) -> PoincarePoint:
    """exp_x(v) = x ⊕ (tanh(λ_x‖v‖/2) · v/‖v‖)"""
    x = as_point(x)
    return _exp(x, _tangent_components(x, v))


def log_map(x: ArrayLike, y: ArrayLike) -> TangentVector:
    """log_x(y) = (2/λ_x) · atanh(‖⊖x⊕y‖) · (⊖x⊕y)/‖⊖x⊕y‖"""
    x, y = as_point(x, "x"), as_point(y, "y")
    _check_dims(x, y)
    return TangentVector(base=x, components=_log(x, y))


def parallel_transport(x: ArrayLike, y: ArrayLike, v: Union[TangentVector, ArrayLike]) -> TangentVector:
    x, y = as_point(x, "x"), as_point(y, "y")
    _check_dims(x, y)
    return TangentVector(base=y, components=_parallel_transport(x, y, _tangent_components(x, v)))
