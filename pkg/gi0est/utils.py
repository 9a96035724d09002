def batch_iterator(iterable, batch_size):
    if batch_size < 1:
        raise ValueError('batch_size must be at least 1, got {}'.format(batch_size))
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) >= batch_size:
            yield batch
            batch = []
    if len(batch) > 0:
        yield batch
