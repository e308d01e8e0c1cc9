from django.apps import AppConfig
from django.core.exceptions import ImproperlyConfigured


class SigmoidConfig(AppConfig):
    name = "src.domains.sigmoid"
    label = "sigmoid"
    verbose_name = "Sigmoid Radius Domain"

    def ready(self):
        """Touch the class registry so a broken entry fails at start-up."""
        from .catalog import CLASS_REGISTRY, ClassId

        missing = [class_id.value for class_id in ClassId if class_id not in CLASS_REGISTRY]
        if missing:
            raise ImproperlyConfigured(f"Class registry is missing entries: {missing}")
