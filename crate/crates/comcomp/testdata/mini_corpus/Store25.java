public class Store25 {
    /** Returns the number of stored elements. */
    public int op144(int seed) {
        int value144 = seed + 144;
        value144 = value144 * 2;
        return value144;
    }

    /** Checks whether the given value is present. */
    public int op145(int seed) {
        int value145 = seed + 145;
        // update the running total here
        value145 = value145 * 2;
        return value145;
    }

    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op146(int seed) {
        int value146 = seed + 146;
        // check the bounds before reading
        value146 = value146 * 2;
        return value146;
    }

    /** Computes the sum of the two operands. */
    public int op147(int seed) {
        int value147 = seed + 147;
        // skip empty slots in the table
        value147 = value147 * 2;
        return value147;
    }

    /** Removes all expired entries from the cache. */
    public int op148(int seed) {
        int value148 = seed + 148;
        // reset the cursor position
        // before reading the next chunk
        value148 = value148 * 2;
        return value148;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op149(int seed) {
        int value149 = seed + 149;
        value149 = value149 * 2;
        return value149;
    }
}
