from fastapi import APIRouter
from . import data
from . import field
from . import intertwiner
from . import observable
from . import representation

router = APIRouter()

router.include_router(representation.router, prefix="/representation")
router.include_router(intertwiner.router, prefix="/intertwiner")
router.include_router(data.router, prefix="/data")
router.include_router(field.router, prefix="/field")
router.include_router(observable.router, prefix="/observable")
