from collections.abc import Callable


_FN_ATTRS = (
    "__annotations__",
    "__qualname__",
    "__module__",
    "__name__",
    "__doc__",
    "__defaults__",
    "__kwdefaults__",
)


def _shim(cls: type, name: str, new: Callable) -> None:
    original = getattr(cls, name)
    for i in _FN_ATTRS:
        if hasattr(original, i):
            setattr(new, i, getattr(original, i))
    setattr(cls, name, new)


def frozen(cls: type) -> type:
    """
    A class decorator that permanently freezes instances once __init__ returns
    Slotted classes must reserve a "_frozen" slot
    Graph values rely on this: every derived graph is a new object, never an edit
    """
    original_init: Callable = cls.__init__
    original_setattr: Callable = cls.__setattr__
    original_delattr: Callable = cls.__delattr__

    def __init__(self, *args, **kwargs) -> None:
        original_init(self, *args, **kwargs)
        object.__setattr__(self, "_frozen", True)

    def __setattr__(self, key: str, value) -> None:
        if getattr(self, "_frozen", False):
            raise AttributeError(f"Cannot modify frozen {type(self).__name__}")
        original_setattr(self, key, value)

    def __delattr__(self, item: str) -> None:
        if getattr(self, "_frozen", False):
            raise AttributeError(f"Cannot modify frozen {type(self).__name__}")
        original_delattr(self, item)

    _shim(cls, "__init__", __init__)
    _shim(cls, "__setattr__", __setattr__)
    _shim(cls, "__delattr__", __delattr__)
    return cls
