import logging
import time

import humanfriendly

from crystal_partitions.models.shardthreads import ShardThread
from crystal_partitions.models.shardthreads import run_shards
from crystal_partitions.series import TruncatedSeries


class PartitionModel(object):
    '''
    Main interface that all partition models must extend.

    A model describes generalised partitions (pi_0, ..., pi_{s-1}, g): a
    fixed ground part g preceded by parts taken from a candidate set, where
    every pair of adjacent parts satisfies follows(left, right). Part
    weights never increase from left to right.

    Usually, it is enough to overload ground, candidates, weight, follows
    and, for colour tracked models, monomial.

    The generating series sum C(pi) q^|pi| is computed from memoised tail
    sums: tail(p, b) is the series of the chains strictly right of p with
    weight at most b, so repeated parts are allowed. Shards are the weights
    of the largest part and are shared between worker threads.
    '''

    shard_num_threads = 4

    def __init__(self, truncation):
        if truncation < 0:
            raise ValueError('Model:Truncation:%d:must be non negative' % (truncation))
        self.logger = logging.getLogger('crystal_partitions')
        self.truncation = truncation
        self.dim = 0
        self._parts = None
        self._right_of = None
        self._on_ground = None
        self._memo = {}

    def set_threads(self, num_threads):
        if num_threads < 1:
            raise ValueError('Model:Threads:%d:need at least one thread' % (num_threads))
        self.shard_num_threads = num_threads

    # To overload

    def ground(self):
        raise NotImplementedError()

    def candidates(self):
        '''
        Parts that may appear left of the ground, any weight
        '''
        raise NotImplementedError()

    def weight(self, part):
        raise NotImplementedError()

    def monomial(self, part):
        return (0,) * self.dim

    def follows(self, left, right):
        '''
        True if left may stand immediately left of right (right may be the ground)
        '''
        raise NotImplementedError()

    def admits(self, part):
        '''
        True if part may appear in the body of a partition of this model
        '''
        return part != self.ground()

    # Partitions

    def is_partition(self, parts):
        parts = tuple(parts)
        if not parts or parts[-1] != self.ground():
            return False
        for part in parts[:-1]:
            if not self.admits(part):
                return False
        for left, right in zip(parts, parts[1:]):
            if not self.follows(left, right):
                return False
        return True

    def weight_of(self, parts):
        return sum(self.weight(part) for part in parts[:-1])

    def monomial_of(self, parts):
        vector = [0] * self.dim
        for part in parts[:-1]:
            for index, value in enumerate(self.monomial(part)):
                vector[index] += value
        return tuple(vector)

    # Tables

    def _build_tables(self):
        '''
        Parts of weight at most N, the parts that may follow each of them
        and the parts that may stand on the ground. Parts from which no
        chain reaches the ground are dropped.
        '''
        if self._parts is not None:
            return
        ground = self.ground()
        parts = []
        for part in self.candidates():
            if part == ground or not self.admits(part):
                continue
            if 0 <= self.weight(part) <= self.truncation:
                parts.append(part)
        parts = sorted(set(parts))
        parts.sort(key=self.weight)
        right_of = {}
        on_ground = set()
        for part in parts:
            w = self.weight(part)
            right_of[part] = [other for other in parts if self.weight(other) <= w and self.follows(part, other)]
            if self.follows(part, ground):
                on_ground.add(part)
        live = set(on_ground)
        changed = True
        while changed:
            changed = False
            for part in parts:
                if part not in live and any(other in live for other in right_of[part]):
                    live.add(part)
                    changed = True
        parts = [part for part in parts if part in live]
        for part in parts:
            right_of[part] = [other for other in right_of[part] if other in live]
        self._parts = parts
        self._right_of = dict((part, right_of[part]) for part in parts)
        self._on_ground = on_ground
        self.logger.debug('Model:Tables:%s:Parts:%d' % (self.__class__.__name__, len(parts)))

    def parts(self):
        self._build_tables()
        return list(self._parts)

    def iter_partitions(self):
        '''
        All partitions of weight at most N, ground included, in a fixed order
        '''
        self._build_tables()
        ground = self.ground()
        yield (ground,)
        for part in reversed(self._parts):
            budget = self.truncation - self.weight(part)
            for tail in self._tails(part, budget, frozenset()):
                yield (part,) + tail

    def _tails(self, part, budget, visiting):
        '''
        Chains right of part of weight at most budget; visiting holds the
        parts met since the last positive weight
        '''
        if part in visiting:
            raise ValueError('Model:Cycle:zero weight cycle through %s' % (str(part)))
        if part in self._on_ground:
            yield (self.ground(),)
        for other in self._right_of[part]:
            w = self.weight(other)
            if w > budget:
                continue
            seen = visiting | frozenset([part]) if w == 0 else frozenset()
            for tail in self._tails(other, budget - w, seen):
                yield (other,) + tail

    # Series

    def _tail(self, part, limit, visiting):
        '''
        Terms of the chains strictly right of part, degree <= limit
        '''
        memo = self._memo.get((part, limit))
        if memo is not None:
            return memo
        if part in visiting:
            raise ValueError('Model:Cycle:zero weight cycle through %s' % (str(part)))
        terms = {}
        if part in self._on_ground:
            zero = (0,) * self.dim
            terms[(0, zero)] = 1
        for other in self._right_of[part]:
            w = self.weight(other)
            if w > limit:
                continue
            seen = visiting | frozenset([part]) if w == 0 else frozenset()
            mono = self.monomial(other)
            for (degree, colour), coeff in self._tail(other, limit - w, seen).items():
                total = degree + w
                key = (total, tuple(a + b for a, b in zip(colour, mono)))
                terms[key] = terms.get(key, 0) + coeff
        with ShardThread.MEMO_LOCK:
            self._memo[(part, limit)] = terms
        return terms

    def compute_shard(self, shard):
        '''
        Terms of all partitions whose largest part has weight shard
        '''
        terms = {}
        for part in self._parts:
            w = self.weight(part)
            if w != shard:
                continue
            mono = self.monomial(part)
            for (degree, colour), coeff in self._tail(part, self.truncation - w, frozenset()).items():
                key = (degree + w, tuple(a + b for a, b in zip(colour, mono)))
                terms[key] = terms.get(key, 0) + coeff
        return terms

    def series(self):
        '''
        Generating series of the model truncated at N

        :return: :class:`crystal_partitions.series.TruncatedSeries`
        '''
        start = time.time()
        self._build_tables()
        self._memo = {}
        shards = sorted(set(self.weight(part) for part in self._parts))

        self.logger.debug("Model:Series:%s:Shards:%d" % (self.__class__.__name__, len(shards)))
        terms = run_shards(self, shards, self.shard_num_threads)
        zero = (0,) * self.dim
        terms[(0, zero)] = terms.get((0, zero), 0) + 1
        self.logger.info('Model:Series:%s:N=%d:Terms:%d:Time:%s' % (
            self.__class__.__name__, self.truncation, len(terms),
            humanfriendly.format_timespan(time.time() - start)))
        return TruncatedSeries(self.truncation, self.dim, terms)
