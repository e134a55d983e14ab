from ..utils.registry import Registry

FLOW_ENGINES = Registry('flow_engines', module_key='cutenum.flows.engines')
