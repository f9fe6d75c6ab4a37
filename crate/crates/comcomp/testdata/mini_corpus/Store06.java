public class Store06 {
    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op030(int seed) {
        int value30 = seed + 30;
        // update the running total here
        value30 = value30 * 2;
        return value30;
    }

    /** <p>Builds the final message text.</p> */
    public int op031(int seed) {
        int value31 = seed + 31;
        // check the bounds before reading
        value31 = value31 * 2;
        return value31;
    }

    /** Returns the number of stored elements. */
    public int op032(int seed) {
        int value32 = seed + 32;
        // skip empty slots in the table
        value32 = value32 * 2;
        return value32;
    }

    /** Checks whether the given value is present. */
    public int op033(int seed) {
        int value33 = seed + 33;
        // reset the cursor position
        // before reading the next chunk
        value33 = value33 * 2;
        return value33;
    }

    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op034(int seed) {
        int value34 = seed + 34;
        value34 = value34 * 2;
        return value34;
    }

    /** Computes the sum of the two operands. */
    public int op035(int seed) {
        int value35 = seed + 35;
        // update the running total here
        value35 = value35 * 2;
        return value35;
    }
}
