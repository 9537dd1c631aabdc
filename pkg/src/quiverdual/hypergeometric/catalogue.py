from quiverdual.architecture.catalogue import Catalogue
from quiverdual.hypergeometric.base_models import FactorBuilder, Form, Model
from quiverdual.hypergeometric.direct import (
    DirectDualGrassmannianFactor,
    DirectGrassmannianFactor,
    DirectPaxFactor,
    DirectPaxyFactor,
)
from quiverdual.hypergeometric.factored import (
    FactoredDualGrassmannianFactor,
    FactoredGrassmannianFactor,
    FactoredPaxFactor,
    FactoredPaxyFactor,
)

factor_catalogue = Catalogue(item_type=FactorBuilder)


def factor_key(model: Model, form: Form) -> str:
    return f"{model.value}.{form.value}"


for _builder in (
    DirectGrassmannianFactor,
    DirectDualGrassmannianFactor,
    DirectPaxFactor,
    DirectPaxyFactor,
    FactoredGrassmannianFactor,
    FactoredDualGrassmannianFactor,
    FactoredPaxFactor,
    FactoredPaxyFactor,
):
    factor_catalogue.register(
        name=factor_key(_builder.model, _builder.form), item=_builder()
    )
