import sys

from typing import Callable, Optional, List

__all__ = ['Registry']

class Registry:
    ''' Name-to-class registry. Flow engines and pair filters are looked up
    by the name stored in a config (e.g. ``engine: 'Dinic'``).

    Args:
        name (str): registry name.
        module_key (str, optional): module whose ``__all__`` gets the registered
            names appended. Defaults to None.
    '''

    def __init__(self, name: str, module_key: Optional[str] = None) -> None:
        self.name = name
        self.module_key = module_key

        self._registered_objects = {}

    def register(self) -> Callable:
        ''' Class decorator '''

        def _register(cls):
            assert cls.__name__ not in self._registered_objects, \
                f'\'{cls.__name__}\' is already registered in {self.name}'

            self._registered_objects[cls.__name__] = cls
            if self.module_key is not None:
                sys.modules[self.module_key].__all__.append(cls.__name__)
            return cls

        return _register

    def build(self, key: str, *args, **kwargs):
        ''' Instantiate the class registered under `key` '''
        return self[key](*args, **kwargs)

    @property
    def registry_names(self) -> List[str]:
        return list(self._registered_objects.keys())

    def __contains__(self, key: str) -> bool:
        return key in self._registered_objects

    def __getitem__(self, key: str) -> Callable:
        try:
            return self._registered_objects[key]
        except KeyError:
            raise KeyError(
                f'\'{key}\' unfound in {self.name}, '
                f'available: {self.registry_names}') from None

    def __len__(self) -> int:
        return len(self._registered_objects)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}(name=\'{self.name}\', ' \
            f'objects={self.registry_names})'
