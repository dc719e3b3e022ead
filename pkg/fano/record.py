import json


class Record(dict):
    """A dict whose keys can also be read as attributes.

    Missing attributes read as None, like dict.get. Records serialize to json
    as plain objects.
    """
    __getattr__ = dict.get
    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

    @classmethod
    def create_recursively(cls, data: dict) -> 'Record':
        """Convert nested dicts, including dicts inside lists, to records."""
        return cls({key: cls._convert(value) for key, value in data.items()})

    @classmethod
    def _convert(cls, value):
        if isinstance(value, dict):
            return cls.create_recursively(value)
        if isinstance(value, list):
            return [cls._convert(v) for v in value]
        return value

    def to_json(self) -> str:
        return json.dumps(self, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> 'Record':
        return cls.create_recursively(json.loads(text))
