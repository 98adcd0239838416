from typing import Any, List, TypedDict

__all__ = (
    'MonoidPayload',
    'MonadPayload',
    'SpaceFilePayload',
)

class MonoidPayload(TypedDict):
    size: int
    unit: int
    table: List[List[int]]

class _MonadPayloadOptional(TypedDict, total=False):
    monoid: MonoidPayload

class MonadPayload(_MonadPayloadOptional):
    kind: str

class _SpaceFilePayloadOptional(TypedDict, total=False):
    labels: List[str]

class SpaceFilePayload(_SpaceFilePayloadOptional):
    monad: MonadPayload
    points: int
    converges: List[List[Any]]
