public class Store17 {
    /** Returns the number of stored elements. */
    public int op096(int seed) {
        int value96 = seed + 96;
        // check the bounds before reading
        value96 = value96 * 2;
        return value96;
    }

    /** Checks whether the given value is present. */
    public int op097(int seed) {
        int value97 = seed + 97;
        // skip empty slots in the table
        value97 = value97 * 2;
        return value97;
    }

    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op098(int seed) {
        int value98 = seed + 98;
        // reset the cursor position
        // before reading the next chunk
        value98 = value98 * 2;
        return value98;
    }

    /** Computes the sum of the two operands. */
    public int op099(int seed) {
        int value99 = seed + 99;
        value99 = value99 * 2;
        return value99;
    }

    /** Removes all expired entries from the cache. */
    public int op100(int seed) {
        int value100 = seed + 100;
        // update the running total here
        value100 = value100 * 2;
        return value100;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op101(int seed) {
        int value101 = seed + 101;
        // check the bounds before reading
        value101 = value101 * 2;
        return value101;
    }
}
