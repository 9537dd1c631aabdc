"""
Name-keyed registries for interchangeable strategies.

Several parts of ``quiverdual`` select an implementation by name at run
time: the restricted-factor builders are looked up by ``(model, form)``,
the CLI suites by suite name and the scenario presets by preset name.
A `Catalogue` holds such a family. It only stores and returns items; it
never instantiates them, so a family can hold classes, instances or plain
callables as long as they match the declared item type.

Usage (Doctest):
----------------
>>> from quiverdual.architecture.catalogue import Catalogue

>>> class Suite:
...     pass

>>> suites = Catalogue(Suite)
>>> suites.register("smoke", Suite())
>>> suites.list_items()
['smoke']

>>> @suites.register_decorator("full")
... class FullSuite(Suite):
...     pass
>>> sorted(suites.list_items())
['full', 'smoke']

>>> from typing import Callable
>>> presets = Catalogue(Callable)
>>> presets.register("empty", lambda: [])
>>> presets.get("empty")()
[]
"""

import inspect
from typing import Any, Dict, List


class Catalogue:
    """
    Registry of items of a single declared type.

    Classes are accepted when they subclass the declared type, anything
    else when it is an instance of it. Names are unique.

    Attributes:
        _items (dict): Registered items keyed by name, in registration order.
        _item_type (type): Type every registered item must conform to.
    """

    def __init__(self, item_type: Any):
        """
        Args:
            item_type (type): Type every registered item must conform to.
        """
        self._items: Dict[str, Any] = {}
        self._item_type = item_type

    def register(self, name: str, item: Any) -> None:
        """
        Adds an item under a new name.

        Args:
            name (str): Registry key.
            item: A subclass or an instance of the declared type.

        Raises:
            TypeError: If the item does not conform to the declared type.
            ValueError: If the name is already taken.
        """
        if inspect.isclass(item):
            if not issubclass(item, self._item_type):
                raise TypeError(
                    f"Provided class is not a subclass of {self._item_type.__name__}."
                )
        elif not isinstance(item, self._item_type):
            raise TypeError(
                f"Provided object is not an instance of {self._item_type.__name__}."
            )

        if name in self._items:
            raise ValueError(f"Item '{name}' already exists.")

        self._items[name] = item

    def remove(self, name: str) -> None:
        """
        Drops a registered item.

        Raises:
            ValueError: If nothing is registered under ``name``.
        """
        if name not in self._items:
            raise ValueError(f"Item '{name}' does not exist.")
        del self._items[name]

    def get(self, name: str) -> Any:
        """
        Returns the item registered under ``name``.

        Raises:
            ValueError: If nothing is registered under ``name``. The message
                lists the available names.
        """
        if name not in self._items:
            raise ValueError(
                f"Item '{name}' does not exist. "
                f"Available: {', '.join(self._items) or 'none'}"
            )
        return self._items[name]

    def list_items(self) -> List[str]:
        """Registered names in registration order."""
        return list(self._items.keys())

    def register_decorator(self, name: str) -> Any:
        """
        Class decorator form of `register`.

        Args:
            name (str): Registry key.

        Returns:
            A decorator that registers its argument and returns it unchanged.
        """

        def decorator(item: Any) -> Any:
            self.register(name, item)
            return item

        return decorator
