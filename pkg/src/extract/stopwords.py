# Ingredient stop words (units, quantities, preparation verbs) removed from raw ingredient lines.
from pydantic import BaseModel, ConfigDict, field_validator

from src.corpus.recipe_parser import read_text, split_records
from src.utils.errors import StopWordError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class StopWordSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    words: frozenset[str] = frozenset()

    def __init__(self, words=frozenset(), **data):
        super().__init__(words=words, **data)

    @field_validator("words")
    @classmethod
    def check_words(cls, words):
        for word in words:
            if not word or word != word.lower() or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid stop word {word!r}: must be non-empty, lowercase, without whitespace")
        return words

    def __contains__(self, token):
        return token in self.words

    def __len__(self):
        return len(self.words)

    def with_words(self, *extra):
        return StopWordSet(self.words | {word.lower() for word in extra})


def load_stopwords(source):
    """
    Read a stop-word file: UTF-8, one token per line, blank lines and '#' comments skipped.
    Tokens are lowercased and duplicates collapse silently.
    """
    try:
        text = read_text(source)
    except ValueError as e:
        raise StopWordError(str(e), 0)

    words = set()
    for line_number, line in split_records(text):
        token = line.strip()
        if not token or token.startswith("#"):
            continue
        if any(ch.isspace() for ch in token):
            raise StopWordError(f"token {token!r} contains whitespace", line_number)
        words.add(token.lower())

    logger.info("Stop words loaded", extra={"stop_words": len(words)})
    return StopWordSet(frozenset(words))
