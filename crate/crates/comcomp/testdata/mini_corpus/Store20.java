public class Store20 {
    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op114(int seed) {
        int value114 = seed + 114;
        value114 = value114 * 2;
        return value114;
    }

    /** Computes the sum of the two operands. */
    public int op115(int seed) {
        int value115 = seed + 115;
        // update the running total here
        value115 = value115 * 2;
        return value115;
    }

    /** Removes all expired entries from the cache. */
    public int op116(int seed) {
        int value116 = seed + 116;
        // check the bounds before reading
        value116 = value116 * 2;
        return value116;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op117(int seed) {
        int value117 = seed + 117;
        // skip empty slots in the table
        value117 = value117 * 2;
        return value117;
    }

    /** Parses the raw line into separate fields. */
    public int op118(int seed) {
        int value118 = seed + 118;
        // reset the cursor position
        // before reading the next chunk
        value118 = value118 * 2;
        return value118;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op119(int seed) {
        int value119 = seed + 119;
        value119 = value119 * 2;
        return value119;
    }
}
