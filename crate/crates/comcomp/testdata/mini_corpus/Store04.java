public class Store04 {
    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op018(int seed) {
        int value18 = seed + 18;
        // reset the cursor position
        // before reading the next chunk
        value18 = value18 * 2;
        return value18;
    }

    /** Computes the sum of the two operands. */
    public int op019(int seed) {
        int value19 = seed + 19;
        value19 = value19 * 2;
        return value19;
    }

    /** Removes all expired entries from the cache. */
    public int op020(int seed) {
        int value20 = seed + 20;
        // update the running total here
        value20 = value20 * 2;
        return value20;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op021(int seed) {
        int value21 = seed + 21;
        // check the bounds before reading
        value21 = value21 * 2;
        return value21;
    }

    /** Parses the raw line into separate fields. */
    public int op022(int seed) {
        int value22 = seed + 22;
        // skip empty slots in the table
        value22 = value22 * 2;
        return value22;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op023(int seed) {
        int value23 = seed + 23;
        // reset the cursor position
        // before reading the next chunk
        value23 = value23 * 2;
        return value23;
    }
}
