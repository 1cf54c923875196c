from pydantic import BaseModel, ConfigDict


class BaseModelPy(BaseModel):
    """Immutable base for every domain value."""

    model_config = ConfigDict(frozen=True, from_attributes=True)
