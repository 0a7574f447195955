import sys
from typing import Any, Callable, Dict, Iterable, List, Optional

import lcadag


class LcaDagError(Exception):
    """
    Base of every error raised by the package. witness holds whatever
    explains the failure (a cycle, a vertex, a pair, a subset...), in labels
    when the error crosses the API boundary
    """

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


# Input problems, also ValueErrors so callers validating data can catch them broadly
class InputError(LcaDagError, ValueError):
    pass


class CycleDetected(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class SelfLoop(InputError):
    pass


class DuplicateLabel(InputError):
    pass


class InvalidLabel(InputError):
    pass


class LabelCollision(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: Optional[int] = None, witness: Any = None):
        super().__init__(message, witness)
        self.line = line


class MalformedInput(InputError):
    pass


class InconsistentFamily(InputError):
    pass


class EmptyQuery(InputError):
    pass


class LastVertex(LcaDagError):
    pass


class SizeLimitExceeded(LcaDagError):
    pass


class NotTreeLeafChild(LcaDagError):
    pass


class NotANetwork(LcaDagError):
    pass


class NoLca(LcaDagError):
    pass


class AmbiguousLca(LcaDagError):
    pass


class NoSuperset(LcaDagError):
    pass


class NotGlobalLca(LcaDagError):
    pass


class OStarViolated(LcaDagError):
    def __init__(self, message: str, witness: Any = None, step: Optional[int] = None):
        super().__init__(message, witness)
        self.step = step


class NotHolju(LcaDagError):
    def __init__(
        self,
        message: str,
        witness: Any = None,
        prefix_size: Optional[int] = None,
        reason: str = "",
    ):
        super().__init__(message, witness)
        self.prefix_size = prefix_size
        self.reason = reason


class RouteDisagreement(LcaDagError):
    """Two recognition routes returned different verdicts. Never expected"""


def format_labels(labels: Iterable[str]) -> str:
    """{a,b,c} in the given order"""
    return "{" + ",".join(labels) + "}"


def check_size(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise SizeLimitExceeded(
            f"{what}: size {size} is above the cap of {cap}, raise it with"
            " LCADAG_MAX_N or LCADAG_SUBSET_CAP if you can wait",
            witness=size,
        )


# This counter lets ConsoleTransport put a blank line before the first
# message, so log output doesn't glue onto a half printed line of results
message_to_str_count = 0

"""
Logging Style Guide:
    - Put the name of the graph, vertex or file first, leave a trail to follow quickly
    - Include how to correct a problem instead of simply complaining about it, if possible
    - Simple English benefits all, no programmer speak or complex grammar
    - Be clear when you're talking about the input graph and a derived graph (lxt, sf, Hasse)
    - Be terse, avoid more than a sentence including data filled in strings - avoid word wrapping
    - Speak calmly and positively. Avoid "you failed" statements and exclamation marks
    - One error per problem, not one error per newline

Spending 20mins on a good error message is better than 2hrs troubleshooting a
user's non-existant bug
"""

Transport = Callable[[str, str, Optional[Any]], None]


class LcaDagLogger:
    def __init__(self):
        self.transports = []  # type: List[Dict[str, Any]]
        self.messages = []  # type: List[Dict[str, Any]]

    def addTransport(
        self, transport: Transport, messageTypes=("error", "warning", "info", "success")
    ):
        self.transports.append({"fn": transport, "types": list(messageTypes)})

    def clear(self):
        self.clearTransports()
        self.clearMessages()

    def clearTransports(self):
        del self.transports[:]

    def clearMessages(self):
        del self.messages[:]

    def messagesToString(self, messages=None):
        if messages is None:
            messages = self.messages

        out = ""

        for message in messages:
            out += (
                LcaDagLogger.messageToString(
                    message["type"], message["message"], message["context"]
                )
                + "\n"
            )

        return out

    def log(self, messageType, message, context=None):
        self.messages.append(
            {"type": messageType, "message": message, "context": context}
        )

        for transport in self.transports:
            if messageType in transport["types"]:
                transport["fn"](messageType, message, context)

    def error(self, message, context=None):
        self.log("error", message, context)

    def warn(self, message, context=None):
        self.log("warning", message, context)

    def info(self, message, context=None):
        self.log("info", message, context)

    def success(self, message, context=None):
        self.log("success", message, context)

    def findOfType(self, messageType):
        return [message for message in self.messages if message["type"] == messageType]

    def hasOfType(self, messageType):
        return any(message["type"] == messageType for message in self.messages)

    def findErrors(self):
        return self.findOfType("error")

    def hasErrors(self):
        return self.hasOfType("error")

    def findWarnings(self):
        return self.findOfType("warning")

    def hasWarnings(self):
        return self.hasOfType("warning")

    def findInfos(self):
        return self.findOfType("info")

    @staticmethod
    def messageToString(messageType, message, context=None):
        lcadag.lca_helpers.message_to_str_count += 1
        if context:
            return "%s: %s: %s" % (messageType.upper(), context, message)
        return "%s: %s" % (messageType.upper(), message)

    @staticmethod
    def ConsoleTransport(stream=None):
        """Writes to stderr by default, stdout carries graphs and reports"""

        def transport(messageType, message, context=None):
            out = stream if stream is not None else sys.stderr
            if lcadag.lca_helpers.message_to_str_count == 0:
                print("", file=out)
            print(LcaDagLogger.messageToString(messageType, message, context), file=out)

        return transport

    @staticmethod
    def FileTransport(filehandle):
        def transport(messageType, message, context=None):
            filehandle.write(
                LcaDagLogger.messageToString(messageType, message, context) + "\n"
            )

        return transport


logger = LcaDagLogger()
