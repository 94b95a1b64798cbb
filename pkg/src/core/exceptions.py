class WienerError(Exception):
    """Base exception for toolkit errors"""
    pass

class GraphError(WienerError):
    """Raised when a graph is malformed or unsuitable for an operation"""
    pass

class InvalidEdgeError(GraphError):
    """Raised when an edge has an out-of-range endpoint or is a self-loop"""

    def __init__(self, pair, reason: str):
        self.pair = tuple(pair)
        super().__init__(f"Invalid edge {self.pair}: {reason}")

class DisconnectedGraphError(GraphError):
    """Raised when a distance sum is requested on a disconnected graph"""

    def __init__(self, vertex: int, message: str = None):
        self.vertex = vertex
        super().__init__(message or f"Graph is disconnected: vertex {vertex} is unreachable")

class CutVertexError(GraphError):
    """Raised when removing a vertex disconnects the graph (Δ is undefined)"""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Removing vertex {vertex} disconnects the graph")

class EdgeListFormatError(WienerError):
    """Raised when an edge-list file cannot be parsed"""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")

class GadgetError(WienerError):
    """Raised when an attachment gadget is invalid"""
    pass

class InfeasibleGadgetError(GadgetError):
    """Raised when no gadget can have the requested transmission"""
    pass

class FamilyParameterError(WienerError):
    """Raised when a named family parameter violates its precondition"""
    pass

class SelectorError(WienerError):
    """Raised when a family selector string cannot be parsed"""
    pass

class NonIntegralDeltaError(WienerError):
    """Raised when 4Δ is not divisible by 4 for a parameter tuple"""

    def __init__(self, params, residue: int):
        self.params = tuple(params)
        self.residue = residue
        super().__init__(
            f"Non-integral Δ for (n, k, n0, t0) = {self.params}: 4Δ ≡ {residue} (mod 4)"
        )

class MetadataError(WienerError):
    """Raised when role metadata does not match the graph it describes"""
    pass

class CapExceededError(WienerError):
    """Raised when a graph is larger than the verification cap"""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"Graph order {order} exceeds verification cap {cap}")
