"""Fixed-capacity ring buffer holding the live window T[left..right]."""
from __future__ import annotations


class WindowError(IndexError):
    """Raised on ring-buffer misuse (overflow, underflow, out-of-window reads)."""


class RingText:
    """Window over a byte stream addressed by global 1-based positions.

    Only ``capacity`` bytes are stored; ``char_at`` refuses positions that
    have been evicted or not yet pushed.
    """

    __slots__ = ("capacity", "buf", "left", "right")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self.buf = bytearray(capacity)
        self.left = 1
        self.right = 0

    def __len__(self):
        return self.right - self.left + 1

    def push(self, c: int) -> int:
        if self.right - self.left + 1 >= self.capacity:
            raise WindowError(f"ring capacity {self.capacity} exceeded")
        self.right += 1
        self.buf[self.right % self.capacity] = c
        return self.right

    def pop_front(self) -> int:
        if self.right < self.left:
            raise WindowError("pop from empty window")
        self.left += 1
        return self.left

    def char_at(self, p: int) -> int:
        if not self.left <= p <= self.right:
            raise WindowError(f"position {p} outside window [{self.left}, {self.right}]")
        return self.buf[p % self.capacity]

    def slice(self, s: int, t: int) -> bytes:
        """T[s..t] inclusive; empty when t < s."""
        if t < s:
            return b""
        if s < self.left or t > self.right:
            raise WindowError(f"range [{s}, {t}] outside window [{self.left}, {self.right}]")
        cap = self.capacity
        a, b = s % cap, t % cap
        if a <= b:
            return bytes(self.buf[a:b + 1])
        return bytes(self.buf[a:]) + bytes(self.buf[:b + 1])

    def window_string(self) -> bytes:
        return self.slice(self.left, self.right)

    def __repr__(self):
        return f"RingText({self.window_string()!r}, left={self.left}, right={self.right})"
