import logging
import threading
import traceback
import sys
from queue import Queue


class ShardThread(threading.Thread):

    def __init__(self, worker, queue, stopevent=None):
        '''
        Shard thread computing partial generating series

        :param worker: object providing compute_shard(shard) -> dict of terms
        :type worker: :class:`crystal_partitions.models.interface.PartitionModel`
        :param queue: shards to compute
        :type queue: :class:`queue.Queue`
        :param stopevent: event shared by the threads of a pool, set on the first failure
        :type stopevent: :class:`threading.Event`
        '''
        threading.Thread.__init__(self)
        self.queue = queue
        self._stopevent = stopevent if stopevent is not None else threading.Event()
        self.error = 0
        self.shards_done = 0
        self.shards_skipped = 0
        self.worker = worker
        self.terms = {}

    def run(self):
        logging.debug('Start shard thread')
        try:
            shard = self.queue.get(False)
        except Exception:
            return
        while shard is not None:
            try:
                if self._stopevent.is_set():
                    self.shards_skipped += 1
                else:
                    partial = self.worker.compute_shard(shard)
                    for key, coeff in partial.items():
                        self.terms[key] = self.terms.get(key, 0) + coeff
                    self.shards_done += 1
            except Exception as e:
                logging.error("Shard error: " + str(e))
                traceback.print_exc(file=sys.stdout)
                self.error += 1
                self.stop()
            self.queue.task_done()
            try:
                shard = self.queue.get(False)
            except Exception:
                break

    def stop(self):
        '''
        Remaining shards of the pool are skipped
        '''
        self._stopevent.set()


ShardThread.MEMO_LOCK = threading.Lock()


def run_shards(worker, shards, num_threads):
    '''
    Compute every shard with a pool of ShardThread and merge their terms.
    The first failing shard stops the pool.

    :param worker: object providing compute_shard(shard) -> dict of terms
    :param shards: shard identifiers
    :type shards: list
    :param num_threads: maximum number of threads
    :type num_threads: int
    :return: dict of merged terms
    '''
    logger = logging.getLogger('crystal_partitions')
    logger.debug("Shards:FillQueue:%d" % (len(shards)))
    shard_queue = Queue()
    for shard in shards:
        shard_queue.put(shard)

    logger.debug("Shards:Start")
    stopevent = threading.Event()
    thlist = []
    for i in range(min(num_threads, max(1, len(shards)))):
        th = ShardThread(worker, shard_queue, stopevent)
        thlist.append(th)
        th.start()

    shard_queue.join()
    for th in thlist:
        th.join()

    nb_error = 0
    nb_done = 0
    nb_skipped = 0
    terms = {}
    for th in thlist:
        nb_error += th.error
        nb_done += th.shards_done
        nb_skipped += th.shards_skipped
        for key, coeff in th.terms.items():
            terms[key] = terms.get(key, 0) + coeff
    logger.debug("Shards:Over:Done:%d:Skipped:%d" % (nb_done, nb_skipped))
    if nb_error > 0:
        raise RuntimeError('Shards:%d shard(s) failed, %d skipped' % (nb_error, nb_skipped))
    return terms
