public class Store14 {
    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op078(int seed) {
        int value78 = seed + 78;
        // reset the cursor position
        // before reading the next chunk
        value78 = value78 * 2;
        return value78;
    }

    /** <p>Builds the final message text.</p> */
    public int op079(int seed) {
        int value79 = seed + 79;
        value79 = value79 * 2;
        return value79;
    }

    /** Returns the number of stored elements. */
    public int op080(int seed) {
        int value80 = seed + 80;
        // update the running total here
        value80 = value80 * 2;
        return value80;
    }

    /** Checks whether the given value is present. */
    public int op081(int seed) {
        int value81 = seed + 81;
        // check the bounds before reading
        value81 = value81 * 2;
        return value81;
    }

    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op082(int seed) {
        int value82 = seed + 82;
        // skip empty slots in the table
        value82 = value82 * 2;
        return value82;
    }

    /** Computes the sum of the two operands. */
    public int op083(int seed) {
        int value83 = seed + 83;
        // reset the cursor position
        // before reading the next chunk
        value83 = value83 * 2;
        return value83;
    }
}
