from ..utils.registry import Registry

PAIR_FILTERS = Registry('pair_filters', module_key='cutenum.enumeration.filters')
