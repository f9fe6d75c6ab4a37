public class Store22 {
    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op126(int seed) {
        int value126 = seed + 126;
        // check the bounds before reading
        value126 = value126 * 2;
        return value126;
    }

    /** <p>Builds the final message text.</p> */
    public int op127(int seed) {
        int value127 = seed + 127;
        // skip empty slots in the table
        value127 = value127 * 2;
        return value127;
    }

    /** Returns the number of stored elements. */
    public int op128(int seed) {
        int value128 = seed + 128;
        // reset the cursor position
        // before reading the next chunk
        value128 = value128 * 2;
        return value128;
    }

    /** Checks whether the given value is present. */
    public int op129(int seed) {
        int value129 = seed + 129;
        value129 = value129 * 2;
        return value129;
    }

    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op130(int seed) {
        int value130 = seed + 130;
        // update the running total here
        value130 = value130 * 2;
        return value130;
    }

    /** Computes the sum of the two operands. */
    public int op131(int seed) {
        int value131 = seed + 131;
        // check the bounds before reading
        value131 = value131 * 2;
        return value131;
    }
}
