"""
Exception types raised by the ingredient network pipeline.

All of them are ValueError subclasses so a stage caller can keep catching
ValueError the way the rest of the pipeline does.
"""


class RecipeParseError(ValueError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


class DuplicateRecipeError(ValueError):
    def __init__(self, recipe_id, line_number=None):
        self.recipe_id = recipe_id
        self.line_number = line_number
        super().__init__(f"duplicate recipe id '{recipe_id}'" + (f" at line {line_number}" if line_number else ""))


class StopWordError(ValueError):
    def __init__(self, message, line_number):
        self.line_number = line_number
        super().__init__(f"stop-word file line {line_number}: {message}")


class GoldAnnotationError(ValueError):
    pass


class GraphError(ValueError):
    pass


class PartitionError(ValueError):
    pass


class ArtifactError(ValueError):
    pass
