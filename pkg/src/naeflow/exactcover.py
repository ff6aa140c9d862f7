"""Exact cover via dancing links (Algorithm X).

The problem: given items 0..N-1 and a family of options (each option covers a
set of items), select options so that every item is covered exactly once.

The implementation uses the array form of dancing links: one header node per
item plus one node per (option, item) incidence, doubly linked within each
item's column.  Covering an item unlinks its column and every option that
contains it; uncovering relinks them in reverse, which makes backtracking
O(1) per link.  Item choice is most-constrained-first (smallest column)
with ties broken by smallest item id, and options are tried in insertion
order, so the first solution found is deterministic.
"""

from __future__ import annotations

from typing import Optional

from .graph import check_deadline


class ExactCover:
    def __init__(self, num_items: int):
        if num_items < 0:
            raise ValueError("num_items must be non-negative")
        self.num_items = num_items
        # Header ring over items; index num_items is the root.
        self._left = list(range(-1, num_items))
        self._left[0] = num_items
        self._right = [i + 1 for i in range(num_items)] + [0]
        if num_items == 0:
            self._left = [num_items]
            self._right = [num_items]
        self._size = [0] * num_items
        # Node arrays; the first num_items entries mirror the items
        # (used as column heads for the up/down links).
        self._up = list(range(num_items))
        self._down = list(range(num_items))
        self._item = list(range(num_items))  # owning item per node
        self._option = [-1] * num_items      # owning option per node
        self._option_nodes: list[tuple[int, ...]] = []
        self._option_ids: list[object] = []

    def add_option(self, option_id, items) -> None:
        items = sorted(set(items))
        for it in items:
            if not (0 <= it < self.num_items):
                raise ValueError(f"item {it} out of range")
        nodes = []
        opt_index = len(self._option_ids)
        self._option_ids.append(option_id)
        for it in items:
            node = len(self._up)
            tail = self._up[it]
            self._up.append(tail)
            self._down.append(it)
            self._down[tail] = node
            self._up[it] = node
            self._item.append(it)
            self._option.append(opt_index)
            self._size[it] += 1
            nodes.append(node)
        self._option_nodes.append(tuple(nodes))

    # Unlink item `it` from the header ring and every option using it from
    # the other columns those options touch.
    def _cover(self, it: int) -> None:
        left, right = self._left, self._right
        up, down = self._up, self._down
        right[left[it]] = right[it]
        left[right[it]] = left[it]
        row = down[it]
        while row != it:
            for other in self._option_nodes[self._option[row]]:
                if other == row:
                    continue
                up[down[other]] = up[other]
                down[up[other]] = down[other]
                self._size[self._item[other]] -= 1
            row = down[row]

    def _uncover(self, it: int) -> None:
        left, right = self._left, self._right
        up, down = self._up, self._down
        row = up[it]
        while row != it:
            for other in reversed(self._option_nodes[self._option[row]]):
                if other == row:
                    continue
                self._size[self._item[other]] += 1
                up[down[other]] = other
                down[up[other]] = other
            row = up[row]
        right[left[it]] = it
        left[right[it]] = it

    def _best_item(self) -> int:
        it = self._right[self.num_items]
        best, best_size = -1, None
        while it != self.num_items:
            if best_size is None or self._size[it] < best_size:
                best, best_size = it, self._size[it]
                if best_size == 0:
                    break
            it = self._right[it]
        return best

    def solve_first(self, stats: Optional[dict] = None,
                    deadline: Optional[float] = None) -> Optional[list]:
        """First exact cover as a list of option ids, or None.

        Iterative backtracking (solutions can be hundreds of options deep).
        """
        nodes_visited = 0
        chosen: list[int] = []     # option index chosen at each level
        item_stack: list[int] = [] # item covered at each level
        row_stack: list[int] = []  # column node whose option is currently tried

        def select(row: int) -> None:
            opt = self._option[row]
            chosen.append(opt)
            for other in self._option_nodes[opt]:
                if other != row:
                    self._cover(self._item[other])

        def deselect(row: int) -> None:
            opt = self._option[row]
            for other in reversed(self._option_nodes[opt]):
                if other != row:
                    self._uncover(self._item[other])
            chosen.pop()

        solution: Optional[list] = None
        descend = True
        while True:
            if descend:
                if self._right[self.num_items] == self.num_items:
                    solution = [self._option_ids[i] for i in chosen]
                    break
                it = self._best_item()
                self._cover(it)
                item_stack.append(it)
                row_stack.append(it)  # sentinel: advance below
            else:
                deselect(row_stack[-1])
            # Advance the current level to its next candidate row.
            row = self._down[row_stack[-1]]
            row_stack[-1] = row
            it = item_stack[-1]
            if row == it:
                # Level exhausted: uncover and backtrack.
                self._uncover(it)
                item_stack.pop()
                row_stack.pop()
                if not row_stack:
                    break
                descend = False
                continue
            nodes_visited += 1
            if nodes_visited % 2048 == 0:
                check_deadline(deadline)
            select(row)
            descend = True

        # Restore the structure so the instance could be reused.
        while row_stack:
            deselect(row_stack[-1])
            self._uncover(item_stack[-1])
            item_stack.pop()
            row_stack.pop()

        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + nodes_visited
        return solution
