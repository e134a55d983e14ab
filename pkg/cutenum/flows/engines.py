from collections import deque
from typing import List

from .register import FLOW_ENGINES

__all__ = ['FLOW_ENGINES']


class FlowNetwork:
    ''' Residual network on integer capacities. Arc `e` and arc `e ^ 1`
    are each other's reverse; `cap` holds residual capacities.

    Subclasses implement `max_flow`. Residual reachability sweeps are shared.

    Args:
        num_nodes (int): number of nodes
    '''

    def __init__(self, num_nodes: int) -> None:
        self.num_nodes = num_nodes
        self.head: List[int] = []
        self.cap: List[int] = []
        self.adj: List[List[int]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, capacity: int) -> None:
        ''' Undirected edge: two opposite arcs, each of full capacity '''
        e = len(self.head)
        self.head.append(v)
        self.cap.append(capacity)
        self.adj[u].append(e)
        self.head.append(u)
        self.cap.append(capacity)
        self.adj[v].append(e + 1)

    def max_flow(self, source: int, sink: int) -> int:
        raise NotImplementedError

    def reachable_from(self, source: int) -> List[bool]:
        ''' Nodes reachable from `source` along arcs with residual capacity '''
        seen = [False] * self.num_nodes
        seen[source] = True
        queue = deque([source])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                v = head[e]
                if cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen

    def reaching(self, sink: int) -> List[bool]:
        ''' Nodes that can reach `sink` along arcs with residual capacity '''
        seen = [False] * self.num_nodes
        seen[sink] = True
        queue = deque([sink])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            v = queue.popleft()
            for e in adj[v]:
                u = head[e]
                # arc u -> v is the reverse of e
                if cap[e ^ 1] > 0 and not seen[u]:
                    seen[u] = True
                    queue.append(u)
        return seen


@FLOW_ENGINES.register()
class Dinic(FlowNetwork):
    ''' Blocking-flow max-flow: BFS level graph, then augmenting paths found
    with current-arc pointers until the level graph is saturated. '''

    def max_flow(self, source: int, sink: int) -> int:
        flow = 0
        while self._levels(source, sink):
            pointer = [0] * self.num_nodes
            while True:
                pushed = self._augment(source, sink, pointer)
                if pushed == 0:
                    break
                flow += pushed
        return flow

    def _levels(self, source: int, sink: int) -> bool:
        level = [-1] * self.num_nodes
        level[source] = 0
        queue = deque([source])
        head, cap, adj = self.head, self.cap, self.adj
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                v = head[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        self.level = level
        return level[sink] >= 0

    def _augment(self, source: int, sink: int, pointer: List[int]) -> int:
        head, cap, adj, level = self.head, self.cap, self.adj, self.level
        path = []
        u = source
        while u != sink:
            arcs = adj[u]
            while pointer[u] < len(arcs):
                e = arcs[pointer[u]]
                v = head[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    break
                pointer[u] += 1
            else:
                # dead end: retreat one arc
                if u == source:
                    return 0
                level[u] = -1
                e = path.pop()
                u = head[e ^ 1]
                pointer[u] += 1
                continue
            path.append(e)
            u = head[e]

        bottleneck = min(cap[e] for e in path)
        for e in path:
            cap[e] -= bottleneck
            cap[e ^ 1] += bottleneck
        return bottleneck


@FLOW_ENGINES.register()
class PushRelabel(FlowNetwork):
    ''' FIFO preflow-push. Active nodes are discharged until no excess is
    left outside source and sink, so the final preflow is a maximum flow. '''

    def max_flow(self, source: int, sink: int) -> int:
        n = self.num_nodes
        head, cap, adj = self.head, self.cap, self.adj
        height = [0] * n
        excess = [0] * n
        current = [0] * n
        height[source] = n

        active = deque()
        for e in adj[source]:
            c = cap[e]
            if c > 0:
                v = head[e]
                cap[e] -= c
                cap[e ^ 1] += c
                excess[v] += c
                excess[source] -= c
                if v != sink and v != source and excess[v] == c:
                    active.append(v)

        while active:
            u = active.popleft()
            arcs = adj[u]
            while excess[u] > 0:
                if current[u] == len(arcs):
                    # relabel; a node with excess always has a residual arc back towards the source
                    height[u] = 1 + min(height[head[e]] for e in arcs if cap[e] > 0)
                    current[u] = 0
                    continue

                e = arcs[current[u]]
                v = head[e]
                if cap[e] > 0 and height[u] == height[v] + 1:
                    delta = min(excess[u], cap[e])
                    cap[e] -= delta
                    cap[e ^ 1] += delta
                    excess[u] -= delta
                    excess[v] += delta
                    if v != sink and v != source and excess[v] == delta:
                        active.append(v)
                else:
                    current[u] += 1

        return excess[sink]
